#pragma once

#include <iosfwd>

namespace subaction::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNotConverged = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Parses argv and runs one subcommand. Summaries go to `out` unless --report is given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace subaction::cli
