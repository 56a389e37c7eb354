#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slowsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slowsum::cli
