#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prmhull {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDisagree = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (args[0] is the program name) and returns
/// the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prmhull
