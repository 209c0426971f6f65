#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sixj {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// Entry point of the sixj command-line tool. `args` excludes the program
/// name. Commands: exact, geometry, scan, check, decay, integral; global
/// flags --digits N and --output PATH. Returns the process exit code:
/// 0 success, 2 usage or domain error, 3 internal failure or a failed check.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sixj
