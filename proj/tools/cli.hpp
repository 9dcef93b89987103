#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hanoi::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when a verification fails or
/// a resource cap is hit, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hanoi::cli
