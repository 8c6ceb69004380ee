#include "signpoly/quantum.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "signpoly/error.hpp"

namespace signpoly {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

double smallest_eigenvalue(const ComplexMatrix& hermitian) {
  const Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

}  // namespace

DensityMatrix validate_state(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() < 2) {
    throw InvalidState(InvalidState::Reason::NotSquare, static_cast<double>(m.rows()));
  }
  for (Index i = 0; i < m.size(); ++i) {
    if (!std::isfinite(m.data()[i].real()) || !std::isfinite(m.data()[i].imag())) {
      throw InvalidInput("state matrix has non-finite entries");
    }
  }
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > tol) throw InvalidState(InvalidState::Reason::NotHermitian, asym);
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  const double trace_err = std::abs(sym.trace().real() - 1.0);
  if (trace_err > tol) throw InvalidState(InvalidState::Reason::BadTrace, trace_err);
  const double lowest = smallest_eigenvalue(sym);
  if (lowest < -tol) throw InvalidState(InvalidState::Reason::NotPsd, lowest);
  return DensityMatrix(std::move(sym));
}

PureState::PureState(ComplexVector amplitudes, double tol) : amps_(std::move(amplitudes)) {
  if (amps_.size() < 2) throw InvalidInput("pure state needs dimension >= 2");
  if (!amps_.allFinite()) throw InvalidInput("pure state has non-finite amplitudes");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > tol) {
    throw InvalidInput("pure state is not unit norm (norm " + std::to_string(norm) + ")");
  }
}

PureState::Normalized PureState::normalize(const ComplexVector& raw) {
  const double norm = raw.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidInput("cannot normalize a zero or non-finite vector");
  return Normalized{PureState(raw / norm), norm};
}

DensityMatrix PureState::projector() const { return validate_state(amps_ * amps_.adjoint()); }

StateCoords::StateCoords(EuclideanPoint point, std::size_t dim) : point_(std::move(point)), dim_(dim) {
  if (dim_ < 2 || point_.size() != dim_ * dim_ - 1) throw DimensionMismatch(dim_ * dim_ - 1, point_.size());
}

std::vector<ComplexMatrix> gell_mann_basis(std::size_t d) {
  if (d < 2) throw InvalidInput("state dimension must be >= 2");
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  const Complex i_unit(0.0, 1.0);
  std::vector<ComplexMatrix> basis;
  basis.reserve(d * d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix b = ComplexMatrix::Zero(idx(d), idx(d));
      b(idx(j), idx(k)) = inv_sqrt2;
      b(idx(k), idx(j)) = inv_sqrt2;
      basis.push_back(std::move(b));
    }
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) {
      ComplexMatrix b = ComplexMatrix::Zero(idx(d), idx(d));
      b(idx(j), idx(k)) = -i_unit * inv_sqrt2;
      b(idx(k), idx(j)) = i_unit * inv_sqrt2;
      basis.push_back(std::move(b));
    }
  }
  for (std::size_t l = 1; l < d; ++l) {
    const double norm = 1.0 / std::sqrt(static_cast<double>(l * (l + 1)));
    ComplexMatrix b = ComplexMatrix::Zero(idx(d), idx(d));
    for (std::size_t i = 0; i < l; ++i) b(idx(i), idx(i)) = norm;
    b(idx(l), idx(l)) = -static_cast<double>(l) * norm;
    basis.push_back(std::move(b));
  }
  return basis;
}

double purity(const DensityMatrix& rho) { return rho.matrix().squaredNorm(); }

double hs_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(static_cast<std::size_t>(a.rows()), static_cast<std::size_t>(b.rows()));
  }
  return (a - b).norm();
}

// Closed forms of Tr(ρ B_k) for the basis above, read straight off the entries.
StateCoords to_coords(const DensityMatrix& rho) {
  const std::size_t d = rho.dim();
  const ComplexMatrix& m = rho.matrix();
  const double sqrt2 = std::numbers::sqrt2;
  std::vector<double> c;
  c.reserve(d * d - 1);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) c.push_back(sqrt2 * m(idx(j), idx(k)).real());
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = j + 1; k < d; ++k) c.push_back(-sqrt2 * m(idx(j), idx(k)).imag());
  }
  double prefix = 0.0;
  for (std::size_t l = 1; l < d; ++l) {
    prefix += m(idx(l - 1), idx(l - 1)).real();
    const double diag = m(idx(l), idx(l)).real();
    c.push_back((prefix - static_cast<double>(l) * diag) / std::sqrt(static_cast<double>(l * (l + 1))));
  }
  return StateCoords(EuclideanPoint(std::move(c)), d);
}

ComplexMatrix from_coords(const StateCoords& coords) {
  const std::size_t d = coords.dim();
  const auto& c = coords.point();
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  ComplexMatrix m = ComplexMatrix::Identity(idx(d), idx(d)) / static_cast<double>(d);
  std::size_t k = 0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b, ++k) {
      m(idx(a), idx(b)) += c[k] * inv_sqrt2;
      m(idx(b), idx(a)) += c[k] * inv_sqrt2;
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b, ++k) {
      m(idx(a), idx(b)) += Complex(0.0, -c[k] * inv_sqrt2);
      m(idx(b), idx(a)) += Complex(0.0, c[k] * inv_sqrt2);
    }
  }
  for (std::size_t l = 1; l < d; ++l, ++k) {
    const double norm = c[k] / std::sqrt(static_cast<double>(l * (l + 1)));
    for (std::size_t i = 0; i < l; ++i) m(idx(i), idx(i)) += norm;
    m(idx(l), idx(l)) -= static_cast<double>(l) * norm;
  }
  return m;
}

Complex cayley_hyperdeterminant(const PureState& psi) {
  if (psi.dim() != 8) throw DimensionMismatch(8, psi.dim());
  const auto& a = psi.amplitudes();
  const Complex a000 = a(0), a001 = a(1), a010 = a(2), a011 = a(3);
  const Complex a100 = a(4), a101 = a(5), a110 = a(6), a111 = a(7);

  const Complex squares = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 +
                          a100 * a100 * a011 * a011;
  const Complex pairs = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 + a000 * a111 * a110 * a001 +
                        a011 * a100 * a101 * a010 + a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
  const Complex quads = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
  return squares - 2.0 * pairs + 4.0 * quads;
}

double three_tangle(const PureState& psi) { return 4.0 * std::abs(cayley_hyperdeterminant(psi)); }

PureState make_canonical(CanonicalState kind) {
  ComplexVector v = ComplexVector::Zero(8);
  switch (kind) {
    case CanonicalState::GHZ:
      v(0) = v(7) = 1.0 / std::numbers::sqrt2;
      break;
    case CanonicalState::W:
      v(1) = v(2) = v(4) = 1.0 / std::numbers::sqrt3;
      break;
  }
  return PureState(std::move(v));
}

PureEnumeration enumerate_pure_sign_perms(const PureState& psi, PureFilter filter, double tol, std::uint64_t cap,
                                          Execution exec) {
  if (filter == PureFilter::WType && psi.dim() != 8) {
    throw InvalidInput("the w-type filter needs a three-qubit state (dimension 8)");
  }
  const ComplexVector& amps = psi.amplitudes();
  const std::span<const Complex> values(amps.data(), static_cast<std::size_t>(amps.size()));
  const SignPermutationSet set(classify_up_to_sign(values), cap);

  std::vector<char> keep(set.size(), 0);
  for_each_index(set.size(), exec, [&](std::size_t i) {
    const auto image = set.at(i).apply(values);
    const PureState candidate(Eigen::Map<const ComplexVector>(image.data(), amps.size()));
    keep[i] = filter == PureFilter::AnyPure || three_tangle(candidate) <= tol;
  });

  PureEnumeration out;
  out.total = set.size();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!keep[i]) continue;
    const auto image = set.at(i).apply(values);
    out.states.emplace_back(Eigen::Map<const ComplexVector>(image.data(), amps.size()));
  }
  return out;
}

CoordEnumeration enumerate_coord_sign_perms(const DensityMatrix& rho, double tol, std::uint64_t cap,
                                            Execution exec) {
  const StateCoords source = to_coords(rho);
  const std::size_t d = rho.dim();
  const SignPermutationSet set(classify_up_to_sign(source.point().coords()), cap);

  std::vector<char> keep(set.size(), 0);
  for_each_index(set.size(), exec, [&](std::size_t i) {
    const StateCoords image(set.at(i).apply(source.point()), d);
    keep[i] = smallest_eigenvalue(from_coords(image)) >= -tol;
  });

  CoordEnumeration out;
  out.total = set.size();
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!keep[i]) continue;
    StateCoords image(set.at(i).apply(source.point()), d);
    out.states.push_back(validate_state(from_coords(image), tol));
    out.coords.push_back(std::move(image));
  }
  return out;
}

}  // namespace signpoly
