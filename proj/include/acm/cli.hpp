#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace acm {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // claim failure or domain error
inline constexpr int kExitUsage = 2;

// Runs one acmtool command; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace acm
