#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nestsub {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitSingularU = 3,
  kExitVerifyFailed = 4,
  kExitInvariant = 5,
};

// Runs one command line (without the program name) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestsub
