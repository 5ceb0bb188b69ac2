#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qhopf {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitMatch = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitLoad = 3,
  kExitCrossCheck = 4,
};

/// Runs one command (args exclude the program name). The JSON report goes to
/// `out`, the human summary and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qhopf
