#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqrtnfa::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kBudget = 3,
};

/// Runs one command line (args[0] is the program name). Output that would go
/// to stdout/stderr is written to `out`/`err`; `--out -` also writes to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqrtnfa::cli
