#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schubfire::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitGuardrail = 3,
  kExitVerification = 4,
};

/// Runs one invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubfire::cli
