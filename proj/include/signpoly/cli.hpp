#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "signpoly/report.hpp"

namespace signpoly::cli {

/// Process exit codes; part of the command-line contract.
enum ExitCode : int {
  kSuccess = 0,
  kNonMember = 1,
  kInputError = 2,
  kResourceCap = 3,
};

struct RunConfig {
  double tol = 1e-9;
  double tol_alpha = 1e-8;
  std::uint64_t cap = 10'000'000;
  OutputFormat format = OutputFormat::Text;
  std::uint64_t seed = 20100101;

  /// Throws InvalidInput unless tolerances are positive and cap >= 1.
  void validate() const;
};

/// Runs the command line (args excludes the program name) and returns the
/// exit code. SIGNPOLY_CAP, when set, replaces the default cap; --cap wins
/// over both.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace signpoly::cli
