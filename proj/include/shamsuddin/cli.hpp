#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shamsuddin::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;     // boolean verdict false under --exit-status
inline constexpr int kExitParse = 2;     // malformed arguments or input text
inline constexpr int kExitSemantic = 3;  // arity, unknown variable, non-triangular, wrong derivation kind
inline constexpr int kExitInternal = 4;  // a witness failed re-verification

/// Runs one command. `args` excludes the program name; `in` backs the '-' path.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace shamsuddin::cli
