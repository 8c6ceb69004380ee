#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>

#include "signpoly/algorithms.hpp"
#include "signpoly/quantum.hpp"

// State documents are JSON:
//
//   {"schema": 1, "dim": 2, "matrix": [[[re, im], [re, im]], [[re, im], [re, im]]]}
//   {"schema": 1, "dim": 8, "amplitudes": [[re, im], ...]}
//
// Matrices are row-major lists of rows. Amplitude vectors need not be
// normalized; they are rescaled on load and the original norm is kept.
//
// Decomposition documents bundle a target, its members and the weights:
//
//   {"schema": 1, "dim": 2, "target": {...}, "members": [{...}, ...], "weights": [...]}
//
// where nested states use the same "matrix" / "amplitudes" fields and may
// omit "dim" and "schema".

namespace signpoly::io {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

struct LoadedState {
  DensityMatrix density;
  /// Set when the document gave amplitudes.
  std::optional<PureState> pure;
  /// Norm of the amplitudes as written (1 for matrix documents).
  double original_norm = 1.0;
};

/// Throws InvalidInput for malformed documents and InvalidState for matrices
/// that are not density matrices.
LoadedState parse_state(const Json& doc, std::optional<std::size_t> inherited_dim = std::nullopt,
                        double tol = kStateTol);
LoadedState parse_state_text(std::string_view text, double tol = kStateTol);
LoadedState load_state_file(const std::string& path, double tol = kStateTol);

DecompositionInput parse_decomposition(const Json& doc, double tol = kStateTol);
DecompositionInput load_decomposition_file(const std::string& path, double tol = kStateTol);

Json matrix_to_json(const ComplexMatrix& m);
Json state_to_json(const DensityMatrix& rho);
Json state_to_json(const PureState& psi);

}  // namespace signpoly::io
