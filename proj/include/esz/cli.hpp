// The `esz` command-line tool.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace esz {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kExitFound = 0,       // structure found, claim verified, or plain success
  kExitNotFound = 1,    // NotFound or BudgetExhausted
  kExitUsage = 2,
  kExitValidation = 3,  // malformed input, invalid parameters, I/O failure
};

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace esz
