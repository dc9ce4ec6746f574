#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdock::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (args[0] is the program name) against the given
// streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdock::cli
