#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jeopardy::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDiagnostics = 1,
  kIoError = 2,
  kRuntimeError = 3,
  kUsage = 64,
};

/// Runs one command. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jeopardy::cli
