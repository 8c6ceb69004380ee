#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <vector>

#include "signpoly/execution.hpp"
#include "signpoly/point.hpp"
#include "signpoly/signperm.hpp"

namespace signpoly {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr double kStateTol = 1e-9;

/// A d×d Hermitian, positive semidefinite, unit-trace matrix (d >= 2).
/// Only obtainable through validate_state, so holding one means the checks
/// passed.
class DensityMatrix {
 public:
  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  friend DensityMatrix validate_state(const ComplexMatrix&, double);

  ComplexMatrix m_;
};

/// Checks Hermiticity (‖M − M†‖∞), trace and the smallest eigenvalue against
/// `tol`, in that order. The stored matrix is symmetrized.
DensityMatrix validate_state(const ComplexMatrix& m, double tol = kStateTol);

/// Unit vector in C^d.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes, double tol = kStateTol);

  struct Normalized;
  /// Rescales any nonzero vector to unit norm and reports the original norm.
  static Normalized normalize(const ComplexVector& raw);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amps_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amps_; }
  /// |ψ⟩⟨ψ|
  DensityMatrix projector() const;

 private:
  ComplexVector amps_;
};

struct PureState::Normalized {
  PureState state;
  double original_norm;
};

/// Coefficients of ρ − I/d in the orthonormal basis from gell_mann_basis(d).
class StateCoords {
 public:
  StateCoords(EuclideanPoint point, std::size_t dim);

  const EuclideanPoint& point() const noexcept { return point_; }
  std::size_t dim() const noexcept { return dim_; }

 private:
  EuclideanPoint point_;
  std::size_t dim_;
};

/// Generalized Gell-Mann matrices scaled so Tr(B_j B_k) = δ_jk. Order:
/// symmetric off-diagonals (j<k, row-major), antisymmetric off-diagonals
/// (same order), then diagonal matrices l = 1..d−1. For d = 2 this is
/// (σx, σy, σz)/√2.
std::vector<ComplexMatrix> gell_mann_basis(std::size_t d);

double purity(const DensityMatrix& rho);
/// √Tr((A−B)†(A−B))
double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b);

StateCoords to_coords(const DensityMatrix& rho);
/// I/d + ∑ c_k B_k. Hermitian with unit trace, but not necessarily PSD.
ComplexMatrix from_coords(const StateCoords& coords);

/// Cayley's 2×2×2 hyperdeterminant of ψ_{abc}, with ψ_{abc} = amplitude[4a + 2b + c].
Complex cayley_hyperdeterminant(const PureState& psi);
/// τ₃ = 4 |Hdet(ψ)|, for three qubits only.
double three_tangle(const PureState& psi);

enum class CanonicalState { GHZ, W };
PureState make_canonical(CanonicalState kind);

enum class PureFilter {
  /// Keep every image that is a valid (pure) state.
  AnyPure,
  /// Additionally require τ₃ <= tol (three qubits only).
  WType,
};

struct PureEnumeration {
  std::vector<PureState> states;
  /// Number of distinct signed images examined.
  std::uint64_t total = 0;
};

/// Applies every distinct signed permutation to the amplitude vector (signs
/// negate amplitudes, permutations relabel basis states). Output follows the
/// canonical SignPermutationSet order regardless of `exec`.
PureEnumeration enumerate_pure_sign_perms(const PureState& psi, PureFilter filter, double tol = kStateTol,
                                          std::uint64_t cap = kDefaultEnumerationCap,
                                          Execution exec = Execution::Parallel);

struct CoordEnumeration {
  std::vector<StateCoords> coords;
  std::vector<DensityMatrix> states;
  std::uint64_t total = 0;
};

/// Signed permutations of the d²−1 state coordinates of rho; keeps the images
/// that map back to valid density matrices. Purity is preserved by every
/// image, so a pure input yields pure vertices.
CoordEnumeration enumerate_coord_sign_perms(const DensityMatrix& rho, double tol = kStateTol,
                                            std::uint64_t cap = kDefaultEnumerationCap,
                                            Execution exec = Execution::Parallel);

}  // namespace signpoly
