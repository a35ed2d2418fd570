#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace collatz {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line. args[0] is the program name.
/// Returns 0 on success, 1 when a checked invariant fails, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace collatz
