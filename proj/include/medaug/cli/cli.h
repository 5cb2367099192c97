#ifndef MEDAUG_CLI_CLI_H_
#define MEDAUG_CLI_CLI_H_

#include <iostream>
#include <string>
#include <vector>

namespace medaug::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationIssues = 1,
  kUsageError = 2,
  kProviderFailure = 3,
  kIoError = 4,
};

// Runs one subcommand. `args` excludes the program name. Results go to
// `out`, diagnostics and the synopsis for usage errors to `err`; logs are
// written to stderr.
int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
        std::ostream& err = std::cerr);

}  // namespace medaug::cli

#endif  // MEDAUG_CLI_CLI_H_
