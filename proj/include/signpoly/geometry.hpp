#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "signpoly/majorization.hpp"
#include "signpoly/point.hpp"
#include "signpoly/signperm.hpp"
#include "signpoly/simplex.hpp"

namespace signpoly {

inline constexpr double kDedupTol = 1e-12;

/// Nonempty, deduplicated set of points sharing one dimension.
class VertexSet {
 public:
  /// Drops points equal to an earlier one within `dedup_tol` per coordinate;
  /// the first occurrence is kept and input order is otherwise preserved.
  explicit VertexSet(std::vector<EuclideanPoint> points, double dedup_tol = kDedupTol);

  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dimension() const noexcept { return points_.front().size(); }
  const EuclideanPoint& operator[](std::size_t i) const { return points_[i]; }
  std::span<const EuclideanPoint> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.cbegin(); }
  auto end() const noexcept { return points_.cend(); }

 private:
  struct Trusted {};
  VertexSet(Trusted, std::vector<EuclideanPoint> points);
  friend VertexSet enumerate_sign_perm_vertices(const EuclideanPoint&, std::uint64_t);
  friend VertexSet enumerate_permutation_vertices(const EuclideanPoint&, std::uint64_t);

  std::vector<EuclideanPoint> points_;
};

/// H = {x : ⟨normal, x⟩ = offset}.
class Hyperplane {
 public:
  Hyperplane(EuclideanPoint normal, double offset);

  const EuclideanPoint& normal() const noexcept { return normal_; }
  double offset() const noexcept { return offset_; }

  /// ⟨normal, x⟩ − offset; positive on the side the normal points to.
  double evaluate(const EuclideanPoint& x) const { return normal_.dot(x) - offset_; }
  bool contains(const EuclideanPoint& x, double tol = 0.0) const { return std::abs(evaluate(x)) <= tol; }

 private:
  EuclideanPoint normal_;
  double offset_;
};

/// Regular cross-polytope center + conv{±α e_k}.
class CrossPolytopeSpec {
 public:
  CrossPolytopeSpec(double scale, EuclideanPoint center);

  std::size_t dimension() const noexcept { return center_.size(); }
  double scale() const noexcept { return scale_; }
  const EuclideanPoint& center() const noexcept { return center_; }

  /// The 2n vertices in the order +α e_1, −α e_1, +α e_2, ...
  std::vector<EuclideanPoint> vertices() const;
  double volume() const;
  double edge_length() const;
  double insphere_radius() const;

 private:
  double scale_;
  EuclideanPoint center_;
};

/// Nonnegative weights summing to one (within 1e-9).
class ConvexCombination {
 public:
  explicit ConvexCombination(std::vector<double> weights, double tol = 1e-9);

  std::size_t size() const noexcept { return weights_.size(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// ∑ λ_i v_i.
  EuclideanPoint combine(const VertexSet& v) const;

 private:
  std::vector<double> weights_;
};

/// All distinct vectors (±a_{π(1)}, …, ±a_{π(n)}). Canonical order from
/// SignPermutationSet. Throws EnumerationTooLarge above `cap`.
VertexSet enumerate_sign_perm_vertices(const EuclideanPoint& a, std::uint64_t cap = kDefaultEnumerationCap);

/// All distinct coordinate permutations of a (the permutahedron vertices).
VertexSet enumerate_permutation_vertices(const EuclideanPoint& a, std::uint64_t cap = kDefaultEnumerationCap);

/// 2^m · n! / (m_1!···m_k!·(n−m)!) over absolute values of a.
std::uint64_t count_sign_perm_vertices(const EuclideanPoint& a);

struct HullMembership {
  bool member = false;
  /// Present when member is true.
  std::optional<ConvexCombination> witness;
  /// ‖∑λ_i v_i − x‖∞ for the witness (or for the best LP point when not a member).
  double residual_inf = 0.0;
};

/// Linear-feasibility test for x ∈ conv(v). Throws SolverFailure when the LP
/// gives up, which is not the same as "not a member".
HullMembership hull_member_lp(const EuclideanPoint& x, const VertexSet& v, double tol = kDefaultTol);

/// True iff the permutahedra conv{π(a)} and conv{π(b)} are disjoint, decided
/// by comparing coordinate sums.
bool hulls_disjoint(const EuclideanPoint& a, const EuclideanPoint& b, double tol = kDefaultTol);

/// (2α)^n / n!
double cross_polytope_volume(std::size_t n, double alpha);
/// α / √n
double insphere_radius(std::size_t n, double alpha);
/// π^{n/2} r^n / Γ(n/2 + 1)
double ball_volume(std::size_t n, double r);

/// Lifts each point to (a, 1) and tests linear independence by singular
/// values relative to the largest (threshold 1e-9).
bool affinely_independent(const VertexSet& v);

/// The hyperplane ⟨1_n, x⟩ = n(n+1)/2 carrying the permutahedron of (1, …, n).
Hyperplane permutahedron_hyperplane(std::size_t n);

}  // namespace signpoly
