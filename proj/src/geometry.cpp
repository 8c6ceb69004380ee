#include "signpoly/geometry.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "signpoly/error.hpp"

namespace signpoly {

VertexSet::VertexSet(std::vector<EuclideanPoint> points, double dedup_tol) {
  if (points.empty()) throw InvalidInput("VertexSet must be nonempty");
  const std::size_t n = points.front().size();
  // Candidates for a near-duplicate must agree in the first coordinate.
  std::multimap<double, std::size_t> by_first;
  points_.reserve(points.size());
  for (auto& p : points) {
    if (p.size() != n) throw DimensionMismatch(n, p.size());
    bool duplicate = false;
    for (auto it = by_first.lower_bound(p[0] - dedup_tol); it != by_first.end() && it->first <= p[0] + dedup_tol;
         ++it) {
      if (points_[it->second].approx_equal(p, dedup_tol)) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    by_first.emplace(p[0], points_.size());
    points_.push_back(std::move(p));
  }
}

VertexSet::VertexSet(Trusted, std::vector<EuclideanPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw InvalidInput("VertexSet must be nonempty");
}

Hyperplane::Hyperplane(EuclideanPoint normal, double offset) : normal_(std::move(normal)), offset_(offset) {
  if (normal_.norm_inf() == 0.0) throw InvalidInput("Hyperplane normal must be nonzero");
  if (!std::isfinite(offset_)) throw InvalidInput("Hyperplane offset must be finite");
}

CrossPolytopeSpec::CrossPolytopeSpec(double scale, EuclideanPoint center)
    : scale_(scale), center_(std::move(center)) {
  if (!(scale_ >= 0.0) || !std::isfinite(scale_)) throw InvalidInput("cross-polytope scale must be finite and >= 0");
}

std::vector<EuclideanPoint> CrossPolytopeSpec::vertices() const {
  std::vector<EuclideanPoint> out;
  out.reserve(2 * dimension());
  for (std::size_t k = 0; k < dimension(); ++k) {
    out.push_back(center_ + EuclideanPoint::axis(dimension(), k, scale_));
    out.push_back(center_ + EuclideanPoint::axis(dimension(), k, -scale_));
  }
  return out;
}

double CrossPolytopeSpec::volume() const { return cross_polytope_volume(dimension(), scale_); }
double CrossPolytopeSpec::edge_length() const { return std::numbers::sqrt2 * scale_; }
double CrossPolytopeSpec::insphere_radius() const { return signpoly::insphere_radius(dimension(), scale_); }

ConvexCombination::ConvexCombination(std::vector<double> weights, double tol) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("convex combination needs at least one weight");
  double sum = 0.0;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < -tol) throw InvalidInput("convex combination weight is negative or not finite");
    sum += w;
  }
  if (std::abs(sum - 1.0) > tol) {
    throw InvalidInput("convex combination weights sum to " + std::to_string(sum) + ", not 1");
  }
}

EuclideanPoint ConvexCombination::combine(const VertexSet& v) const {
  if (v.size() != size()) throw DimensionMismatch(size(), v.size());
  std::vector<double> acc(v.dimension(), 0.0);
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += weights_[i] * v[i][k];
  }
  return EuclideanPoint(std::move(acc));
}

VertexSet enumerate_sign_perm_vertices(const EuclideanPoint& a, std::uint64_t cap) {
  const SignPermutationSet set(classify_up_to_sign(a.coords()), cap);
  std::vector<EuclideanPoint> points;
  points.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) points.push_back(set.at(i).apply(a));
  return VertexSet(VertexSet::Trusted{}, std::move(points));
}

VertexSet enumerate_permutation_vertices(const EuclideanPoint& a, std::uint64_t cap) {
  // Classes by value, not up to sign.
  std::vector<int> class_of(a.size());
  std::vector<std::vector<std::size_t>> sources;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t c = 0;
    while (c < sources.size() && std::abs(a[sources[c].front()] - a[i]) > kClassTol) ++c;
    if (c == sources.size()) sources.emplace_back();
    sources[c].push_back(i);
    class_of[i] = static_cast<int>(c);
  }
  SignClassLayout layout;
  layout.class_of = class_of;
  for (const auto& s : sources) layout.multiplicities.push_back(s.size());
  const std::uint64_t count = count_arrangements(layout);
  if (count > cap) throw EnumerationTooLarge(count, cap);

  std::vector<int> labels(class_of);
  std::sort(labels.begin(), labels.end());
  std::vector<EuclideanPoint> points;
  points.reserve(static_cast<std::size_t>(count));
  std::vector<std::size_t> next(sources.size());
  do {
    std::fill(next.begin(), next.end(), 0);
    std::vector<double> c(a.size());
    for (std::size_t pos = 0; pos < labels.size(); ++pos) {
      const auto cls = static_cast<std::size_t>(labels[pos]);
      c[pos] = a[sources[cls][next[cls]++]];
    }
    points.emplace_back(std::move(c));
  } while (std::next_permutation(labels.begin(), labels.end()));
  return VertexSet(VertexSet::Trusted{}, std::move(points));
}

std::uint64_t count_sign_perm_vertices(const EuclideanPoint& a) {
  return count_signed_images(classify_up_to_sign(a.coords()));
}

HullMembership hull_member_lp(const EuclideanPoint& x, const VertexSet& v, double tol) {
  const std::size_t n = v.dimension();
  if (x.size() != n) throw DimensionMismatch(n, x.size());
  const std::size_t m = v.size();

  DenseRows a(n + 1, std::vector<double>(m, 0.0));
  std::vector<double> b(n + 1, 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < m; ++i) a[k][i] = v[i][k];
    b[k] = x[k];
  }
  std::fill(a[n].begin(), a[n].end(), 1.0);

  SimplexOptions options;
  options.tol = tol;
  FeasibilityResult lp = solve_feasibility(a, b, options);

  HullMembership out;
  std::vector<double> lambda = std::move(lp.solution);
  double total = 0.0;
  for (double w : lambda) total += w;
  if (total > 0.0) {
    for (double& w : lambda) w /= total;
  }
  double residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double s = -x[k];
    for (std::size_t i = 0; i < m; ++i) s += lambda[i] * v[i][k];
    residual = std::max(residual, std::abs(s));
  }
  out.residual_inf = residual;
  out.member = lp.feasible;
  if (out.member) out.witness.emplace(std::move(lambda));
  return out;
}

bool hulls_disjoint(const EuclideanPoint& a, const EuclideanPoint& b, double tol) {
  require_same_dimension(a, b);
  return std::abs(a.sum() - b.sum()) > tol;
}

double cross_polytope_volume(std::size_t n, double alpha) {
  if (n == 0) throw InvalidInput("dimension must be >= 1");
  if (!(alpha >= 0.0)) throw InvalidInput("alpha must be >= 0");
  double v = 1.0;
  for (std::size_t i = 1; i <= n; ++i) v *= 2.0 * alpha / static_cast<double>(i);
  return v;
}

double insphere_radius(std::size_t n, double alpha) {
  if (n == 0) throw InvalidInput("dimension must be >= 1");
  if (!(alpha >= 0.0)) throw InvalidInput("alpha must be >= 0");
  return alpha / std::sqrt(static_cast<double>(n));
}

double ball_volume(std::size_t n, double r) {
  if (n == 0) throw InvalidInput("dimension must be >= 1");
  if (!(r >= 0.0)) throw InvalidInput("radius must be >= 0");
  if (r == 0.0) return 0.0;
  const double half_n = 0.5 * static_cast<double>(n);
  return std::exp(half_n * std::log(std::numbers::pi) + static_cast<double>(n) * std::log(r) -
                  std::lgamma(half_n + 1.0));
}

bool affinely_independent(const VertexSet& v) {
  const std::size_t m = v.size();
  const std::size_t n = v.dimension();
  if (m > n + 1) return false;
  Eigen::MatrixXd lifted(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) lifted(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = v[i][k];
    lifted(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n)) = 1.0;
  }
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(lifted);
  const auto& sigma = svd.singularValues();
  const double largest = sigma.size() > 0 ? sigma(0) : 0.0;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > 1e-9 * largest) ++rank;
  }
  return static_cast<std::size_t>(rank) == m;
}

Hyperplane permutahedron_hyperplane(std::size_t n) {
  if (n < 2) throw InvalidInput("permutahedron hyperplane needs n >= 2");
  const double nd = static_cast<double>(n);
  return Hyperplane(EuclideanPoint(std::vector<double>(n, 1.0)), nd * (nd + 1.0) / 2.0);
}

}  // namespace signpoly
