#include "signpoly/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>

#include "signpoly/algorithms.hpp"
#include "signpoly/error.hpp"
#include "signpoly/kernels.hpp"
#include "signpoly/state_io.hpp"

namespace signpoly::cli {

namespace {

using Json = nlohmann::json;

Json point_to_json(const EuclideanPoint& p) { return Json(std::vector<double>(p.begin(), p.end())); }

Json amplitudes_to_json(const PureState& psi) { return io::state_to_json(psi)["amplitudes"]; }

std::uint64_t cap_from_environment(std::uint64_t fallback) {
  const char* env = std::getenv("SIGNPOLY_CAP");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || v == 0) throw InvalidInput("SIGNPOLY_CAP must be a positive integer");
  return v;
}

struct EnumerateArgs {
  std::string file;
  std::string target;
  std::string filter = "any-pure";
  bool vertices = false;
};

int cmd_enumerate(const EnumerateArgs& args, const RunConfig& config, std::ostream& out) {
  const io::LoadedState loaded = io::load_state_file(args.file, config.tol);
  const std::string target = !args.target.empty() ? args.target : (loaded.pure ? "amplitudes" : "bloch");
  const PureFilter filter = args.filter == "w-type" ? PureFilter::WType : PureFilter::AnyPure;

  Report report("enumerate");
  report.add("target", target);
  report.add("filter", args.filter);
  report.add("dim", static_cast<std::int64_t>(loaded.density.dim()));
  report.add("original_norm", loaded.original_norm);

  std::uint64_t total = 0;
  std::size_t retained = 0;
  Json vertex_list = Json::array();
  if (target == "amplitudes") {
    if (!loaded.pure) throw InvalidInput("--target amplitudes needs a state given by amplitudes");
    const auto result = enumerate_pure_sign_perms(*loaded.pure, filter, config.tol, config.cap);
    total = result.total;
    retained = result.states.size();
    if (args.vertices) {
      for (const auto& s : result.states) vertex_list.push_back(amplitudes_to_json(s));
    }
  } else {
    if (filter == PureFilter::WType) throw InvalidInput("the w-type filter applies to --target amplitudes only");
    const auto result = enumerate_coord_sign_perms(loaded.density, config.tol, config.cap);
    total = result.total;
    retained = result.states.size();
    if (args.vertices) {
      for (const auto& c : result.coords) vertex_list.push_back(point_to_json(c.point()));
    }
  }

  report.set_headline("enumerated " + std::to_string(total) + ", retained " + std::to_string(retained) + " (" +
                      std::to_string(retained) + " vertices)");
  report.add("enumerated", static_cast<std::int64_t>(total));
  report.add("retained", static_cast<std::int64_t>(retained));
  if (args.vertices) report.add("vertices", vertex_list);
  report.render(out, config.format);
  return kSuccess;
}

int cmd_construct(const std::string& file, bool vertices, const RunConfig& config, std::ostream& out) {
  const DecompositionInput input = io::load_decomposition_file(file, config.tol);
  InscribeOptions options;
  options.tol_alpha = config.tol_alpha;
  options.tol_lp = config.tol;
  const QuantumCrossPolytope polytope = max_inscribed_cross_polytope(input, options);

  const std::size_t d = input.dim();
  const double alpha = polytope.alpha();
  const InsphereReport sphere = insphere_report(d, alpha);
  const double fraction = robustness_fraction(d, alpha);
  const double fraction_ratio = robustness_fraction_by_volume(d, alpha);

  std::size_t valid = 0;
  Json vertex_list = Json::array();
  for (const auto& m : polytope.vertex_matrices()) {
    try {
      validate_state(m, config.tol);
      ++valid;
    } catch (const InvalidState&) {
    }
    if (vertices) vertex_list.push_back(io::matrix_to_json(m));
  }
  const std::size_t vertex_count = 2 * (d * d - 1);

  Report report("construct");
  report.set_headline(polytope.degenerate ? "degenerate cross-polytope (target lies on the hull boundary)"
                                          : "inscribed cross-polytope found");
  report.add("dim", static_cast<std::int64_t>(d));
  report.add("members", static_cast<std::int64_t>(input.members().size()));
  report.add("decomposition_residual", input.residual());
  report.add("alpha", alpha);
  report.add("degenerate", polytope.degenerate);
  report.add("edge_length", polytope.edge_length());
  report.add("volume", polytope.volume());
  report.add("insphere_radius", sphere.radius);
  report.add("insphere_volume", sphere.ball_volume);
  report.add("insphere_ratio", sphere.ratio);
  report.add("insphere_ratio_estimate", sphere.approximation);
  report.add("robustness_fraction", fraction);
  report.add("robustness_fraction_by_volume", fraction_ratio);
  report.add("valid_vertices", static_cast<std::int64_t>(valid));
  report.add("vertex_count", static_cast<std::int64_t>(vertex_count));
  report.add("containment_checks", static_cast<std::int64_t>(polytope.containment_checks));
  if (vertices) report.add("vertices", vertex_list);
  report.render(out, config.format);
  return kSuccess;
}

int cmd_check(const std::string& center_file, const std::string& probe_file, double alpha, const RunConfig& config,
              std::ostream& out) {
  const auto center = io::load_state_file(center_file, config.tol);
  const auto probe = io::load_state_file(probe_file, config.tol);
  if (center.density.dim() != probe.density.dim()) {
    throw DimensionMismatch(center.density.dim(), probe.density.dim());
  }
  const std::size_t d = center.density.dim();
  const bool member = robustness_member(probe.density, center.density, alpha, config.tol);
  const EuclideanPoint shift = to_coords(probe.density).point() - to_coords(center.density).point();

  Report report("check");
  report.set_headline(member ? "member" : "non-member");
  report.add("member", member);
  report.add("dim", static_cast<std::int64_t>(d));
  report.add("alpha", alpha);
  report.add("hs_distance", hs_distance(probe.density.matrix(), center.density.matrix()));
  report.add("l1_distance", shift.norm1());
  report.add("robustness_fraction", robustness_fraction(d, alpha));
  report.add("robustness_fraction_by_volume", robustness_fraction_by_volume(d, alpha));
  report.render(out, config.format);
  return member ? kSuccess : kNonMember;
}

int cmd_volume(std::size_t d, double alpha, std::uint64_t samples, const RunConfig& config, std::ostream& out) {
  const std::size_t n = d * d - 1;
  const InsphereReport sphere = insphere_report(d, alpha);

  Report report("volume");
  report.add("dim", static_cast<std::int64_t>(d));
  report.add("coord_dim", static_cast<std::int64_t>(n));
  report.add("alpha", alpha);
  report.add("hs_volume", hs_volume(d));
  report.add("cross_volume", cross_polytope_volume(n, alpha));
  report.add("robustness_fraction", robustness_fraction(d, alpha));
  report.add("robustness_fraction_by_volume", robustness_fraction_by_volume(d, alpha));
  report.add("insphere_radius", sphere.radius);
  report.add("insphere_volume", sphere.ball_volume);
  report.add("insphere_ratio", sphere.ratio);
  report.add("insphere_ratio_estimate", sphere.approximation);
  if (samples > 0) {
    const auto mc = kernels::monte_carlo_cross_polytope_volume(n, alpha, samples, config.seed);
    report.add("mc_samples", static_cast<std::int64_t>(samples));
    report.add("mc_volume", mc.volume);
    report.add("mc_std_error", mc.std_error);
  }
  report.render(out, config.format);
  return kSuccess;
}

int cmd_tangle(const std::string& file, const RunConfig& config, std::ostream& out) {
  const auto loaded = io::load_state_file(file, config.tol);
  if (!loaded.pure) throw InvalidInput("tangle needs a state given by amplitudes");
  const Complex hdet = cayley_hyperdeterminant(*loaded.pure);
  const double tau = three_tangle(*loaded.pure);

  Report report("tangle");
  report.add("three_tangle", tau);
  report.add("hyperdeterminant_re", hdet.real());
  report.add("hyperdeterminant_im", hdet.imag());
  report.add("vanishes", tau <= config.tol);
  report.add("original_norm", loaded.original_norm);
  report.render(out, config.format);
  return kSuccess;
}

}  // namespace

void RunConfig::validate() const {
  if (!(tol > 0.0) || !(tol_alpha > 0.0)) throw InvalidInput("tolerances must be positive");
  if (cap < 1) throw InvalidInput("cap must be >= 1");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign permutation polytopes and their quantum counterparts", "signpoly"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  std::uint64_t cap_flag = 0;
  std::string format = "text";
  app.add_option("--tol", config.tol, "Membership / validation tolerance")->capture_default_str();
  app.add_option("--tol-alpha", config.tol_alpha, "Bisection resolution on alpha")->capture_default_str();
  app.add_option("--cap", cap_flag, "Enumeration cap (default 1e7, or $SIGNPOLY_CAP)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for randomized estimates")->capture_default_str();

  EnumerateArgs enumerate;
  auto* sub_enumerate = app.add_subcommand("enumerate", "Sign permutations of a pure or mixed state");
  sub_enumerate->add_option("state-file", enumerate.file)->required();
  sub_enumerate->add_option("--target", enumerate.target, "What the permutations act on")
      ->check(CLI::IsMember({"bloch", "amplitudes"}));
  sub_enumerate->add_option("--filter", enumerate.filter, "Which images to keep")
      ->check(CLI::IsMember({"any-pure", "w-type"}))
      ->capture_default_str();
  sub_enumerate->add_flag("--vertices", enumerate.vertices, "Print the retained vertices");

  std::string decomposition_file;
  bool construct_vertices = false;
  auto* sub_construct = app.add_subcommand("construct", "Maximal inscribed cross-polytope of a decomposition");
  sub_construct->add_option("decomposition-file", decomposition_file)->required();
  sub_construct->add_flag("--vertices", construct_vertices, "Print the vertex matrices");

  std::string center_file;
  std::string probe_file;
  double check_alpha = 0.0;
  auto* sub_check = app.add_subcommand("check", "Is a probe state inside the cross-polytope around a center?");
  sub_check->add_option("center-file", center_file)->required();
  sub_check->add_option("probe-file", probe_file)->required();
  sub_check->add_option("--alpha", check_alpha, "Cross-polytope scale")->required();

  std::size_t volume_dim = 2;
  double volume_alpha = 0.0;
  std::uint64_t volume_samples = 0;
  auto* sub_volume = app.add_subcommand("volume", "Volumes, insphere and robustness fraction");
  sub_volume->add_option("--dim", volume_dim, "State dimension d")->required();
  sub_volume->add_option("--alpha", volume_alpha, "Cross-polytope scale")->required();
  sub_volume->add_option("--samples", volume_samples, "Monte-Carlo samples for a volume cross-check");

  std::string tangle_file;
  auto* sub_tangle = app.add_subcommand("tangle", "Three-tangle of a three-qubit pure state");
  sub_tangle->add_option("state-file", tangle_file)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    config.cap = cap_from_environment(config.cap);
    if (cap_flag != 0) config.cap = cap_flag;
    config.format = format == "json" ? OutputFormat::Json : OutputFormat::Text;
    config.validate();

    if (*sub_enumerate) return cmd_enumerate(enumerate, config, out);
    if (*sub_construct) return cmd_construct(decomposition_file, construct_vertices, config, out);
    if (*sub_check) return cmd_check(center_file, probe_file, check_alpha, config, out);
    if (*sub_volume) return cmd_volume(volume_dim, volume_alpha, volume_samples, config, out);
    if (*sub_tangle) return cmd_tangle(tangle_file, config, out);
  } catch (const EnumerationTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const SolverFailure& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace signpoly::cli
