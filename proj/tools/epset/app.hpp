#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace epset {

/// Exit codes of the epset tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalError = 3;
inline constexpr int kExitUsageError = 64;

/// Runs the tool on the given arguments (without the program name).
/// Reports go to `out` (or the --output file), diagnostics to `err` only.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace epset
