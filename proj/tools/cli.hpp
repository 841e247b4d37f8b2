#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sigperm::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kUsage = 2, kBudget = 3 };

// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sigperm::cli
