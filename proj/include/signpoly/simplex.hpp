#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace signpoly {

/// Dense row-major matrix used by the LP routines.
using DenseRows = std::vector<std::vector<double>>;

struct SimplexOptions {
  /// A system is declared feasible when the optimal L1 residual is <= tol.
  double tol = 1e-9;
  /// Entries smaller than this are never used as pivots.
  double pivot_tol = 1e-12;
  /// 0 selects the default cap of 50 * (variables + rows).
  std::size_t max_iterations = 0;
};

struct FeasibilityResult {
  bool feasible = false;
  /// Best z >= 0 found, i.e. an L1-nearest solution of A z = b.
  std::vector<double> solution;
  /// ‖A z − b‖₁ for the returned solution.
  double residual_l1 = 0.0;
  std::size_t iterations = 0;
};

/// Phase-1 simplex for {z >= 0 : A z = b}.
///
/// Solves min ∑(s⁺ + s⁻) subject to A z + s⁺ − s⁻ = b, z, s⁺, s⁻ >= 0, starting
/// from the all-slack basis. Bland's rule is used for both entering and
/// leaving variables, so the method cannot cycle. Throws SolverFailure when
/// the iteration cap is hit.
FeasibilityResult solve_feasibility(const DenseRows& a, std::span<const double> b,
                                    const SimplexOptions& options = {});

}  // namespace signpoly
