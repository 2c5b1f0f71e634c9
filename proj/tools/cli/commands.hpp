#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kfc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMath = 1;
inline constexpr int kExitInput = 2;

/// Runs the kfc command line; args excludes the program name. Returns the
/// process exit code: 0 success, 1 mathematical failure, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kfc::cli
