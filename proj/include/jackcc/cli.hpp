#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jackcc {

/// Exit codes of the jackcc command line.
enum ExitCode : int {
  kExitOk = 0,
  kExitTheoremFailure = 1,
  kExitParseError = 2,
  kExitCapExceeded = 3,
  kExitConjectureFailure = 4,
};

/// Runs the jackcc command line on args (without the program name), writing
/// results to out and diagnostics to err. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jackcc
