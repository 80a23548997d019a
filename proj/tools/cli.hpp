#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace petrie::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitDisagreement = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace petrie::cli
