#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gentaut::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitInconsistent = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics and usage to `err`. Returns the process exit code.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gentaut::cli
