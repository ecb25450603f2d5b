#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgespec::cli {

/// Exit codes: 0 all checks hold, 2 a verified bound or identity failed,
/// 1 usage or input error.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kViolation = 2;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edgespec::cli
