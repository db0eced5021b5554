#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dslab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadArguments = 2;

/// Runs the command line; argv[0] is the program name. Reports go under
/// --out, the summary to `out`, diagnostics to `err`.
int cli_run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace dslab
