#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hadafrac {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Runs the command line `args` (without the program name). Regular output goes to `out`
/// unless --out names a file; diagnostics and summaries go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Human-readable number: 15 decimals in fixed notation for moderate magnitudes,
/// otherwise 15 significant digits in scientific notation.
std::string format_human(double value);

}  // namespace hadafrac
