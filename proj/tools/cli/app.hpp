#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latfree::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFinding = 1;  // violation or counterexample candidate
inline constexpr int kExitInput = 2;    // bad flags, unreadable or malformed input

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace latfree::cli
