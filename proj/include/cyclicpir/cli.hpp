#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cyclicpir {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Exit codes:
/// 0 success, 1 a verification reported a mismatch or failure, 2 usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclicpir
