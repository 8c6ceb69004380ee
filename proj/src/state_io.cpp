#include "signpoly/state_io.hpp"

#include <fstream>
#include <sstream>

#include "signpoly/error.hpp"

namespace signpoly::io {

namespace {

Complex parse_complex(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidInput(where + ": expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

void check_schema(const Json& doc) {
  if (!doc.is_object()) throw InvalidInput("document must be a JSON object");
  if (!doc.contains("schema")) throw InvalidInput("missing \"schema\" field");
  if (!doc["schema"].is_number_integer() || doc["schema"].get<int>() != kSchemaVersion) {
    throw InvalidInput("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  }
}

std::size_t read_dim(const Json& doc, std::optional<std::size_t> inherited) {
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer() || doc["dim"].get<long long>() < 2) {
      throw InvalidInput("\"dim\" must be an integer >= 2");
    }
    const auto d = static_cast<std::size_t>(doc["dim"].get<long long>());
    if (inherited && *inherited != d) throw DimensionMismatch(*inherited, d);
    return d;
  }
  if (inherited) return *inherited;
  throw InvalidInput("missing \"dim\" field");
}

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

LoadedState parse_state(const Json& doc, std::optional<std::size_t> inherited_dim, double tol) {
  if (!doc.is_object()) throw InvalidInput("state must be a JSON object");
  const std::size_t d = read_dim(doc, inherited_dim);
  const bool has_matrix = doc.contains("matrix");
  const bool has_amps = doc.contains("amplitudes");
  if (has_matrix == has_amps) throw InvalidInput("state needs exactly one of \"matrix\" or \"amplitudes\"");

  if (has_matrix) {
    const Json& rows = doc["matrix"];
    if (!rows.is_array() || rows.size() != d) throw InvalidInput("\"matrix\" must have dim rows");
    ComplexMatrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t r = 0; r < d; ++r) {
      if (!rows[r].is_array() || rows[r].size() != d) throw InvalidInput("\"matrix\" row must have dim entries");
      for (std::size_t c = 0; c < d; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            parse_complex(rows[r][c], "matrix[" + std::to_string(r) + "][" + std::to_string(c) + "]");
      }
    }
    return LoadedState{validate_state(m, tol), std::nullopt, 1.0};
  }

  const Json& amps = doc["amplitudes"];
  if (!amps.is_array() || amps.size() != d) throw InvalidInput("\"amplitudes\" must have dim entries");
  ComplexVector v(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    v(static_cast<Eigen::Index>(i)) = parse_complex(amps[i], "amplitudes[" + std::to_string(i) + "]");
  }
  auto normalized = PureState::normalize(v);
  DensityMatrix rho = normalized.state.projector();
  return LoadedState{std::move(rho), std::move(normalized.state), normalized.original_norm};
}

LoadedState parse_state_text(std::string_view text, double tol) {
  const Json doc = parse_document(text);
  check_schema(doc);
  return parse_state(doc, std::nullopt, tol);
}

LoadedState load_state_file(const std::string& path, double tol) { return parse_state_text(read_file(path), tol); }

DecompositionInput parse_decomposition(const Json& doc, double tol) {
  check_schema(doc);
  const std::size_t d = read_dim(doc, std::nullopt);
  for (const char* key : {"target", "members", "weights"}) {
    if (!doc.contains(key)) throw InvalidInput(std::string("missing \"") + key + "\" field");
  }
  if (!doc["members"].is_array() || !doc["weights"].is_array()) {
    throw InvalidInput("\"members\" and \"weights\" must be arrays");
  }
  DensityMatrix target = parse_state(doc["target"], d, tol).density;
  std::vector<DensityMatrix> members;
  for (const auto& m : doc["members"]) members.push_back(parse_state(m, d, tol).density);
  std::vector<double> weights;
  for (const auto& w : doc["weights"]) {
    if (!w.is_number()) throw InvalidInput("weights must be numbers");
    weights.push_back(w.get<double>());
  }
  return DecompositionInput(std::move(target), std::move(members), ConvexCombination(std::move(weights)));
}

DecompositionInput load_decomposition_file(const std::string& path, double tol) {
  return parse_decomposition(parse_document(read_file(path)), tol);
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json state_to_json(const DensityMatrix& rho) {
  return Json{{"schema", kSchemaVersion}, {"dim", rho.dim()}, {"matrix", matrix_to_json(rho.matrix())}};
}

Json state_to_json(const PureState& psi) {
  Json amps = Json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) amps.push_back(complex_to_json(psi.amplitudes()(i)));
  return Json{{"schema", kSchemaVersion}, {"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

}  // namespace signpoly::io
