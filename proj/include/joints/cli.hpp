#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace joints::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kBoundViolated = 2;
inline constexpr int kInternalError = 3;

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace joints::cli
