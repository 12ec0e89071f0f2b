#ifndef QUADVAL_CLI_APP_HPP
#define QUADVAL_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quadval::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitInputError = 2,
  kExitDomainError = 3,
  kExitPartialBatch = 4,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace quadval::cli

#endif  // QUADVAL_CLI_APP_HPP
