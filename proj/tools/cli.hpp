#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtp::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kViolation = 2;

/// Runs the tool on argv[1..]. Output goes to `out` unless --out is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtp::cli
