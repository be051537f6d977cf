#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyeval::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `polyeval` tool; `args` excludes the program name.
/// Subcommands: eval, bench, verify.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyeval::cli
