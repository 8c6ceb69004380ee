#include "signpoly/point.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace signpoly {

EuclideanPoint::EuclideanPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidInput("EuclideanPoint needs at least one coordinate");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i])) {
      throw InvalidInput("EuclideanPoint coordinate " + std::to_string(i) + " is not finite");
    }
  }
}

EuclideanPoint::EuclideanPoint(std::initializer_list<double> coords)
    : EuclideanPoint(std::vector<double>(coords)) {}

EuclideanPoint EuclideanPoint::zeros(std::size_t n) { return EuclideanPoint(std::vector<double>(n, 0.0)); }

EuclideanPoint EuclideanPoint::axis(std::size_t n, std::size_t k, double scale) {
  if (k >= n) throw InvalidInput("axis index out of range");
  std::vector<double> c(n, 0.0);
  c[k] = scale;
  return EuclideanPoint(std::move(c));
}

double EuclideanPoint::sum() const noexcept { return std::accumulate(coords_.begin(), coords_.end(), 0.0); }

double EuclideanPoint::norm1() const noexcept {
  double s = 0.0;
  for (double v : coords_) s += std::abs(v);
  return s;
}

double EuclideanPoint::norm2() const noexcept {
  double s = 0.0;
  for (double v : coords_) s += v * v;
  return std::sqrt(s);
}

double EuclideanPoint::norm_inf() const noexcept {
  double m = 0.0;
  for (double v : coords_) m = std::max(m, std::abs(v));
  return m;
}

double EuclideanPoint::dot(const EuclideanPoint& other) const {
  require_same_dimension(*this, other);
  return std::inner_product(coords_.begin(), coords_.end(), other.coords_.begin(), 0.0);
}

EuclideanPoint EuclideanPoint::abs() const {
  std::vector<double> c(coords_.size());
  std::transform(coords_.begin(), coords_.end(), c.begin(), [](double v) { return std::abs(v); });
  return EuclideanPoint(std::move(c));
}

bool EuclideanPoint::approx_equal(const EuclideanPoint& other, double tol) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (std::abs(coords_[i] - other.coords_[i]) > tol) return false;
  }
  return true;
}

EuclideanPoint operator+(const EuclideanPoint& a, const EuclideanPoint& b) {
  require_same_dimension(a, b);
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return EuclideanPoint(std::move(c));
}

EuclideanPoint operator-(const EuclideanPoint& a, const EuclideanPoint& b) {
  require_same_dimension(a, b);
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return EuclideanPoint(std::move(c));
}

EuclideanPoint operator*(double s, const EuclideanPoint& a) {
  std::vector<double> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a.coords_[i];
  return EuclideanPoint(std::move(c));
}

void require_same_dimension(const EuclideanPoint& a, const EuclideanPoint& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
}

SignedPermutation::SignedPermutation(std::vector<std::size_t> perm, std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size()) throw DimensionMismatch(perm_.size(), signs_.size());
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t p : perm_) {
    if (p >= perm_.size() || seen[p]) throw InvalidInput("SignedPermutation: perm is not a bijection");
    seen[p] = true;
  }
  for (std::int8_t s : signs_) {
    if (s != 1 && s != -1) throw InvalidInput("SignedPermutation: signs must be +1 or -1");
  }
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return SignedPermutation(std::move(perm), std::vector<std::int8_t>(n, 1));
}

EuclideanPoint SignedPermutation::apply(const EuclideanPoint& p) const {
  return EuclideanPoint(apply<double>(p.coords()));
}

}  // namespace signpoly
