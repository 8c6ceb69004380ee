#include "signpoly/algorithms.hpp"

#include <cmath>
#include <numbers>

#include "signpoly/error.hpp"
#include "signpoly/kernels.hpp"
#include "signpoly/majorization.hpp"

namespace signpoly {

namespace {

std::size_t coord_dim(std::size_t d) { return d * d - 1; }

void require_alpha(double alpha) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) throw InvalidInput("alpha must be finite and >= 0");
}

void require_state_dim(std::size_t d) {
  if (d < 2) throw InvalidInput("state dimension must be >= 2");
}

// log(Γ(1)···Γ(d))
double log_gamma_product(std::size_t d) {
  double s = 0.0;
  for (std::size_t k = 1; k <= d; ++k) s += std::lgamma(static_cast<double>(k));
  return s;
}

}  // namespace

DecompositionInput::DecompositionInput(DensityMatrix target, std::vector<DensityMatrix> members,
                                       ConvexCombination weights, double residual_tol)
    : target_(std::move(target)), members_(std::move(members)), weights_(std::move(weights)) {
  const std::size_t d = target_.dim();
  if (members_.size() <= coord_dim(d)) {
    throw InvalidInput("decomposition needs more than d^2-1 = " + std::to_string(coord_dim(d)) + " members, got " +
                       std::to_string(members_.size()));
  }
  if (weights_.size() != members_.size()) throw DimensionMismatch(members_.size(), weights_.size());
  ComplexMatrix sum = ComplexMatrix::Zero(target_.matrix().rows(), target_.matrix().cols());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].dim() != d) throw DimensionMismatch(d, members_[i].dim());
    sum += weights_[i] * members_[i].matrix();
  }
  residual_ = hs_distance(sum, target_.matrix());
  if (residual_ > residual_tol) {
    throw InvalidInput("decomposition does not reproduce the target (HS residual " + std::to_string(residual_) +
                       ")");
  }
}

VertexSet translated_member_coords(const DecompositionInput& input) {
  const EuclideanPoint center = to_coords(input.target()).point();
  std::vector<EuclideanPoint> shifted;
  shifted.reserve(input.members().size());
  for (const auto& member : input.members()) shifted.push_back(to_coords(member).point() - center);
  return VertexSet(std::move(shifted));
}

std::vector<ComplexMatrix> QuantumCrossPolytope::vertex_matrices() const {
  std::vector<ComplexMatrix> out;
  for (auto& v : spec.vertices()) out.push_back(from_coords(StateCoords(std::move(v), dim)));
  return out;
}

QuantumCrossPolytope max_inscribed_cross_polytope(const DecompositionInput& input, const InscribeOptions& options) {
  if (!(options.tol_alpha > 0.0)) throw InvalidInput("tol_alpha must be positive");
  const VertexSet members = translated_member_coords(input);

  // ±α e_k ∈ conv(members) forces α <= max_i |t_{i,k}|.
  double hi = 0.0;
  for (const auto& m : members) hi = std::max(hi, m.norm_inf());

  std::size_t checks = 0;
  auto contained = [&](double alpha) {
    ++checks;
    return kernels::cross_polytope_contained(alpha, members, options.tol_lp, options.exec);
  };

  double lo = 0.0;
  if (hi > 0.0 && contained(hi)) {
    lo = hi;
  } else {
    while (hi - lo > options.tol_alpha) {
      const double mid = 0.5 * (lo + hi);
      if (contained(mid)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
  }

  const bool degenerate = lo < options.tol_alpha;
  const double alpha = degenerate ? 0.0 : lo;
  return QuantumCrossPolytope{CrossPolytopeSpec(alpha, to_coords(input.target()).point()), input.dim(), input,
                              degenerate, checks};
}

double hs_volume(std::size_t d) {
  require_state_dim(d);
  const double dd = static_cast<double>(d);
  const double log_v = 0.5 * std::log(dd) + 0.5 * dd * (dd - 1.0) * std::log(std::numbers::pi) -
                       0.5 * (dd - 1.0) * std::numbers::ln2 + log_gamma_product(d) - std::lgamma(dd * dd);
  const double v = std::exp(log_v);
  if (v == 0.0 || !std::isfinite(v)) throw std::range_error("hs_volume out of floating-point range");
  return v;
}

double robustness_fraction(std::size_t d, double alpha) {
  require_state_dim(d);
  require_alpha(alpha);
  if (alpha == 0.0) return 0.0;
  const double dd = static_cast<double>(d);
  const double log_f = 0.5 * (2.0 * dd + 3.0) * (dd - 1.0) * std::numbers::ln2 +
                       static_cast<double>(coord_dim(d)) * std::log(alpha) - 0.5 * std::log(dd) -
                       0.5 * dd * (dd - 1.0) * std::log(std::numbers::pi) - log_gamma_product(d);
  return std::exp(log_f);
}

double robustness_fraction_by_volume(std::size_t d, double alpha) {
  require_state_dim(d);
  require_alpha(alpha);
  return cross_polytope_volume(coord_dim(d), alpha) / hs_volume(d);
}

bool robustness_member(const DensityMatrix& probe, const DensityMatrix& center, double alpha, double tol) {
  require_alpha(alpha);
  if (probe.dim() != center.dim()) throw DimensionMismatch(center.dim(), probe.dim());
  const EuclideanPoint shifted = to_coords(probe).point() - to_coords(center).point();
  return sign_perm_member(shifted, EuclideanPoint::axis(shifted.size(), 0, alpha), tol);
}

InsphereReport insphere_report(std::size_t d, double alpha) {
  require_state_dim(d);
  require_alpha(alpha);
  const std::size_t n = coord_dim(d);
  InsphereReport r;
  r.radius = insphere_radius(n, alpha);
  r.ball_volume = ball_volume(n, r.radius);
  r.cross_volume = cross_polytope_volume(n, alpha);
  r.ratio = r.cross_volume > 0.0 ? r.ball_volume / r.cross_volume : 0.0;
  r.approximation = std::pow(std::numbers::pi / 4.0, 0.5 * static_cast<double>(n));
  return r;
}

}  // namespace signpoly
