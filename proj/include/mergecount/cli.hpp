#ifndef MERGECOUNT_CLI_HPP
#define MERGECOUNT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mergecount {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
};

/// Runs one command-line invocation. `args` excludes the program name.
/// Standard input is only read by `sortcount --case file`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace mergecount

#endif  // MERGECOUNT_CLI_HPP
