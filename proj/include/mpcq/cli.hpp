#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpcq {

/// Exit codes: 0 success / affirmative verdict, 1 negative mathematical
/// verdict, 2 input or usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpcq
