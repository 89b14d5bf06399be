#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ortho::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kImpossible = 1,  // mathematically certified impossibility only
  kUsage = 2,       // usage, IO, unsupported input, internal failure
  kBudget = 3,
};

// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ortho::cli
