#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ahdb::cli {

/// Exit codes of the command line tool.
enum ExitCode : int {
  kOk = 0,
  kFailed = 1,      // verification failure or count disagreement
  kUsage = 2,       // bad arguments or a request beyond size limits
  kInfeasible = 3,  // k = 1, n > 1
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ahdb::cli
