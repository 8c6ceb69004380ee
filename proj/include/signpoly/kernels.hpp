#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "signpoly/execution.hpp"
#include "signpoly/geometry.hpp"

// Batched, data-parallel versions of the membership tests and the Monte-Carlo
// volume estimator. Every kernel has a Serial path that is the reference;
// Parallel results are identical element for element.

namespace signpoly::kernels {

/// sign_perm_member(points[i], a, tol) for every i.
std::vector<char> sign_perm_member_batch(std::span<const EuclideanPoint> points, const EuclideanPoint& a,
                                         double tol = kDefaultTol, Execution exec = Execution::Parallel);

/// hull_member_lp(points[i], v, tol).member for every i.
std::vector<char> hull_member_batch(std::span<const EuclideanPoint> points, const VertexSet& v,
                                    double tol = kDefaultTol, Execution exec = Execution::Parallel);

/// True iff all 2n points ±α e_k lie in conv(v) (v centered so the target is
/// the origin).
bool cross_polytope_contained(double alpha, const VertexSet& v, double tol = kDefaultTol,
                              Execution exec = Execution::Parallel);

struct MonteCarloEstimate {
  double volume = 0.0;
  /// Standard error of the estimator, box volume × √(p(1−p)/N).
  double std_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Rejection sampling of {x : ‖x‖₁ <= α} inside the box [−α, α]^n. Samples
/// are drawn in fixed-size chunks, each with its own generator seeded from
/// (seed, chunk index), so the result does not depend on `exec`.
MonteCarloEstimate monte_carlo_cross_polytope_volume(std::size_t n, double alpha, std::uint64_t samples,
                                                     std::uint64_t seed, Execution exec = Execution::Parallel);

}  // namespace signpoly::kernels
