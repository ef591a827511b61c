#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tcore::cli {

/// Exit codes: 0 success or proven, 1 refuted or not holomorphic,
/// 2 not applicable or usage error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace tcore::cli
