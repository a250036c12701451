#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dlout::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;
inline constexpr int kBudget = 3;

// Runs one command. `args` excludes the program name; a file argument of "-"
// reads from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace dlout::cli
