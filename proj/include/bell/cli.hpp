#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bell::cli {

/// Stable process exit codes.
enum ExitStatus : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInvalidRequest = 2,
  kIoError = 3,
};

/// Runs the command line (args excludes the program name) and returns the
/// exit status. All output goes to `out` / `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bell::cli
