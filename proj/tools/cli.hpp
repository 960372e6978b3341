#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lodesq::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kNumerical = 2,  ///< degenerate sets, failed verification
  kBudget = 3,
};

/// Entry point shared by the executable and the tests. Subcommands:
/// gen, measure, optimize, lattice.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses one --params entry: a decimal literal, `pi`, `e`, or `sqrt(<x>)`.
double parse_param(const std::string& token);

}  // namespace lodesq::cli
