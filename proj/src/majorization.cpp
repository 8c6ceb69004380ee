#include "signpoly/majorization.hpp"

#include <algorithm>
#include <vector>

namespace signpoly {

namespace {

std::vector<double> sorted_desc(std::span<const double> v) {
  std::vector<double> s(v.begin(), v.end());
  std::stable_sort(s.begin(), s.end(), std::greater<>());
  return s;
}

}  // namespace

EuclideanPoint sort_desc(const EuclideanPoint& p) { return EuclideanPoint(sorted_desc(p.coords())); }

bool majorizes(const EuclideanPoint& b, const EuclideanPoint& a, double tol) {
  require_same_dimension(a, b);
  const auto as = sorted_desc(a.coords());
  const auto bs = sorted_desc(b.coords());
  double sa = 0.0;
  double sb = 0.0;
  for (std::size_t l = 0; l < as.size(); ++l) {
    sa += as[l];
    sb += bs[l];
    if (sa > sb + tol) return false;
  }
  return std::abs(sa - sb) <= tol;
}

bool weakly_majorized(const EuclideanPoint& x, const EuclideanPoint& a, double tol, Boundary boundary) {
  require_same_dimension(x, a);
  const auto xs = sorted_desc(x.coords());
  const auto as = sorted_desc(a.coords());
  const std::size_t n = xs.size();
  double sx = 0.0;
  double sa = 0.0;
  for (std::size_t l = 0; l + 1 < n; ++l) {
    sx += xs[l];
    sa += as[l];
    if (sx > sa + tol) return false;
  }
  sx += xs[n - 1];
  sa += as[n - 1];
  if (boundary == Boundary::Strict) return sx < sa;
  return sx <= sa + tol;
}

bool rado_member(const EuclideanPoint& x, const EuclideanPoint& a, double tol) { return majorizes(a, x, tol); }

bool sign_perm_member(const EuclideanPoint& x, const EuclideanPoint& a, double tol, Boundary boundary) {
  require_same_dimension(x, a);
  return weakly_majorized(x.abs(), a.abs(), tol, boundary);
}

}  // namespace signpoly
