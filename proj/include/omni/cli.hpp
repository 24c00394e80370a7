#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omni::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kInfeasible = 1;     // validation found a violated constraint
inline constexpr int kInputError = 2;     // bad arguments, files, or enumeration caps
inline constexpr int kInternalError = 3;  // broken invariant (library bug)

/// Runs the full command line (subcommand + flags) against the given
/// streams; returns the process exit code. argv[0] is implied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace omni::cli
