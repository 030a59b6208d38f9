#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepkit {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitDisagreement = 2,  // engines disagree or an identity fails
  kExitBudget = 3,
  kExitInput = 4,
};

/// Runs `sepkit <args...>`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepkit
