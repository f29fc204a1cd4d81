#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace letterstat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; `in` is read when an input is "-" or no input is
/// given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace letterstat::cli
