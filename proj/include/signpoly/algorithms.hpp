#pragma once

#include <vector>

#include "signpoly/execution.hpp"
#include "signpoly/geometry.hpp"
#include "signpoly/quantum.hpp"

namespace signpoly {

inline constexpr double kDecompositionTol = 1e-8;

/// ρ = ∑ λ_i ρ_i with m > d²−1 members of one dimension.
class DecompositionInput {
 public:
  DecompositionInput(DensityMatrix target, std::vector<DensityMatrix> members, ConvexCombination weights,
                     double residual_tol = kDecompositionTol);

  const DensityMatrix& target() const noexcept { return target_; }
  const std::vector<DensityMatrix>& members() const noexcept { return members_; }
  const ConvexCombination& weights() const noexcept { return weights_; }
  std::size_t dim() const noexcept { return target_.dim(); }
  /// ‖∑λ_i ρ_i − ρ‖_HS
  double residual() const noexcept { return residual_; }

 private:
  DensityMatrix target_;
  std::vector<DensityMatrix> members_;
  ConvexCombination weights_;
  double residual_;
};

/// Member coordinates shifted so the target sits at the origin.
VertexSet translated_member_coords(const DecompositionInput& input);

struct InscribeOptions {
  /// Absolute resolution of the bisection on α.
  double tol_alpha = 1e-8;
  /// Tolerance of each hull-membership LP.
  double tol_lp = kDefaultTol;
  Execution exec = Execution::Parallel;
};

struct QuantumCrossPolytope {
  /// Scale α and center to_coords(ρ) in d²−1 dimensions.
  CrossPolytopeSpec spec;
  std::size_t dim;
  DecompositionInput provenance;
  /// The target sits on the boundary of its decomposition hull; α is 0.
  bool degenerate = false;
  std::size_t containment_checks = 0;

  double alpha() const noexcept { return spec.scale(); }
  double volume() const { return spec.volume(); }
  double edge_length() const { return spec.edge_length(); }
  double insphere_radius() const { return spec.insphere_radius(); }
  /// The 2(d²−1) vertices mapped back to matrices, in CrossPolytopeSpec order.
  std::vector<ComplexMatrix> vertex_matrices() const;
};

/// Largest α for which every ±α e_k around the target lies in the convex hull
/// of the member states (in state coordinates), found by bisection on
/// [0, max_i ‖ρ̃_i − ρ̃‖∞]. Containment is monotone in α because the hull is
/// convex and contains the origin.
QuantumCrossPolytope max_inscribed_cross_polytope(const DecompositionInput& input,
                                                  const InscribeOptions& options = {});

/// Hilbert–Schmidt volume of the d×d density matrices,
/// √d π^{d(d−1)/2} 2^{−(d−1)/2} Γ(1)···Γ(d) / Γ(d²), evaluated in log space.
double hs_volume(std::size_t d);

/// Closed form 2^{(2d+3)(d−1)/2} α^{d²−1} / (√d π^{d(d−1)/2} Γ(1)···Γ(d)).
double robustness_fraction(std::size_t d, double alpha);
/// The same quantity as cross_polytope_volume(d²−1, α) / hs_volume(d).
double robustness_fraction_by_volume(std::size_t d, double alpha);

/// Whether probe lies in the cross-polytope of scale α around center:
/// shift by the center, fold into the positive cone, and test weak
/// majorization by (α, 0, …, 0).
bool robustness_member(const DensityMatrix& probe, const DensityMatrix& center, double alpha,
                       double tol = kDefaultTol);

struct InsphereReport {
  double radius = 0.0;
  double ball_volume = 0.0;
  double cross_volume = 0.0;
  /// ball_volume / cross_volume (0 when α = 0).
  double ratio = 0.0;
  /// (π/4)^{(d²−1)/2}, the rough estimate of that ratio.
  double approximation = 0.0;
};

InsphereReport insphere_report(std::size_t d, double alpha);

}  // namespace signpoly
