#pragma once

// Command-line front end: `rsl [--digits D] verify|integral|dump ...`.
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 evaluation error.

#include <ostream>
#include <string>
#include <vector>

namespace rsl::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInternal = 3;

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rsl::cli
