#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "signpoly/cli.hpp"
#include "signpoly/report.hpp"

using namespace signpoly;

namespace {

std::string data(const std::string& name) { return std::string(SIGNPOLY_DATA_DIR) + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = cli::kSuccess) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(std::move(args));
  REQUIRE_MESSAGE(r.code == expected_code, r.err);
  return nlohmann::json::parse(r.out);
}

// Scoped override of an environment variable.
class EnvGuard {
 public:
  EnvGuard(const char* name, const char* value) : name_(name) { ::setenv(name, value, 1); }
  ~EnvGuard() { ::unsetenv(name_); }
  EnvGuard(const EnvGuard&) = delete;
  EnvGuard& operator=(const EnvGuard&) = delete;

 private:
  const char* name_;
};

}  // namespace

TEST_CASE("enumerate: qubit Bloch vector gives the cuboctahedron") {
  const auto r = run({"enumerate", data("qubit_bloch.json"), "--target", "bloch"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("enumerated 12, retained 12") != std::string::npos);
  const auto j = run_json({"enumerate", data("qubit_bloch.json"), "--vertices"});
  CHECK(j["target"] == "bloch");
  CHECK(j["retained"] == 12);
  REQUIRE(j["vertices"].size() == 12);
  for (const auto& v : j["vertices"]) {
    double l1 = 0.0;
    for (double x : v) l1 += std::abs(x);
    CHECK(l1 == doctest::Approx(1.0));
  }
}

TEST_CASE("enumerate: W example amplitudes") {
  const auto r = run({"enumerate", data("w_example.json"), "--filter", "w-type"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("enumerated 26880, retained 5376") != std::string::npos);
  const auto any = run_json({"enumerate", data("w_example.json")});
  CHECK(any["target"] == "amplitudes");
  CHECK(any["enumerated"] == 26880);
  CHECK(any["retained"] == 26880);
}

TEST_CASE("enumerate: input errors and the enumeration cap") {
  CHECK(run({"enumerate", data("empty.json")}).code == cli::kInputError);
  CHECK(run({"enumerate", data("missing.json")}).code == cli::kInputError);
  CHECK(run({"enumerate"}).code == cli::kInputError);
  CHECK(run({"frobnicate"}).code == cli::kInputError);
  CHECK(run({"--format", "xml", "volume", "--dim", "2", "--alpha", "0.1"}).code == cli::kInputError);
  CHECK(run({"enumerate", data("qubit_bloch.json"), "--filter", "w-type"}).code == cli::kInputError);
  CHECK(run({"--cap", "1000", "enumerate", data("w_example.json")}).code == cli::kResourceCap);
  {
    EnvGuard env("SIGNPOLY_CAP", "1000");
    CHECK(run({"enumerate", data("w_example.json")}).code == cli::kResourceCap);
    // the flag wins over the environment
    CHECK(run({"--cap", "100000", "enumerate", data("w_example.json")}).code == cli::kSuccess);
  }
  {
    EnvGuard env("SIGNPOLY_CAP", "lots");
    CHECK(run({"enumerate", data("qubit_bloch.json")}).code == cli::kInputError);
  }
}

TEST_CASE("construct") {
  const auto j = run_json({"construct", data("octahedral_decomposition.json")});
  CHECK(j["alpha"].get<double>() == doctest::Approx(0.4).epsilon(1e-6));
  CHECK(j["degenerate"] == false);
  CHECK(j["robustness_fraction"].get<double>() == doctest::Approx(0.16297).epsilon(1e-4));
  CHECK(j["robustness_fraction_by_volume"].get<double>() ==
        doctest::Approx(j["robustness_fraction"].get<double>()).epsilon(1e-10));
  CHECK(j["valid_vertices"] == 6);
  CHECK(j["vertex_count"] == 6);

  const auto cube = run_json({"construct", data("cube_decomposition.json"), "--vertices"});
  CHECK(cube["alpha"].get<double>() == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(cube["vertices"].size() == 6);

  const auto degenerate = run_json({"construct", data("degenerate_decomposition.json")});
  CHECK(degenerate["degenerate"] == true);
  CHECK(degenerate["alpha"] == 0.0);

  CHECK(run({"construct", data("too_few_members.json")}).code == cli::kInputError);
  CHECK(run({"construct", data("qubit_bloch.json")}).code == cli::kInputError);
}

TEST_CASE("check") {
  const auto inside = run_json({"check", data("maximally_mixed_qubit.json"), data("probe_l1_0.1.json"), "--alpha", "0.2"});
  CHECK(inside["member"] == true);
  CHECK(inside["l1_distance"].get<double>() == doctest::Approx(0.1));

  const auto outside = run_json(
      {"check", data("maximally_mixed_qubit.json"), data("probe_l1_0.3.json"), "--alpha", "0.2"}, cli::kNonMember);
  CHECK(outside["member"] == false);
  CHECK(outside["robustness_fraction"].get<double>() == doctest::Approx(0.020372).epsilon(1e-4));

  CHECK(run({"check", data("maximally_mixed_qubit.json"), data("ghz.json"), "--alpha", "0.2"}).code ==
        cli::kInputError);
  CHECK(run({"check", data("maximally_mixed_qubit.json"), data("probe_l1_0.1.json"), "--alpha", "-1"}).code ==
        cli::kInputError);
}

TEST_CASE("volume") {
  const auto j = run_json({"volume", "--dim", "2", "--alpha", "1"});
  CHECK(j["coord_dim"] == 3);
  CHECK(j["hs_volume"].get<double>() == doctest::Approx(M_PI / 6));
  CHECK(j["cross_volume"].get<double>() == doctest::Approx(4.0 / 3.0));
  CHECK(j["insphere_ratio"].get<double>() == doctest::Approx(0.6046).epsilon(1e-4));
  CHECK_FALSE(j.contains("mc_volume"));

  const auto mc = run_json({"--seed", "7", "volume", "--dim", "2", "--alpha", "1", "--samples", "200000"});
  CHECK(std::abs(mc["mc_volume"].get<double>() - 4.0 / 3.0) <= 4.0 * mc["mc_std_error"].get<double>());
  CHECK(mc == run_json({"--seed", "7", "volume", "--dim", "2", "--alpha", "1", "--samples", "200000"}));

  CHECK(run({"volume", "--dim", "1", "--alpha", "1"}).code == cli::kInputError);
  CHECK(run({"volume", "--dim", "2"}).code == cli::kInputError);
}

TEST_CASE("tangle") {
  const auto ghz = run_json({"tangle", data("ghz.json")});
  CHECK(ghz["three_tangle"].get<double>() == doctest::Approx(1.0));
  CHECK(ghz["vanishes"] == false);
  const auto w = run_json({"tangle", data("w.json")});
  CHECK(w["three_tangle"].get<double>() <= 1e-12);
  CHECK(w["vanishes"] == true);
  CHECK(run({"tangle", data("qubit_bloch.json")}).code == cli::kInputError);
}

TEST_CASE("text and JSON output carry the same report") {
  const std::vector<std::vector<std::string>> commands = {
      {"enumerate", data("qubit_bloch.json")},
      {"construct", data("octahedral_decomposition.json")},
      {"construct", data("degenerate_decomposition.json")},
      {"check", data("maximally_mixed_qubit.json"), data("probe_l1_0.1.json"), "--alpha", "0.2"},
      {"volume", "--dim", "3", "--alpha", "0.25"},
      {"tangle", data("w_example.json")},
  };
  for (const auto& args : commands) {
    const auto text = run(args);
    REQUIRE(text.code == cli::kSuccess);
    auto with_format = args;
    with_format.insert(with_format.begin(), {"--format", "json"});
    const auto json = run(with_format);
    REQUIRE(json.code == cli::kSuccess);
    CHECK(parse_text_report(text.out) == nlohmann::ordered_json::parse(json.out));
  }
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("construct") != std::string::npos);
}
