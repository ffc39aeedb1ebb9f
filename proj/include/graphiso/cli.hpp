#pragma once

#include <iosfwd>

namespace graphiso {

/// Exit codes: 0 all applicable checks hold, 1 usage or input error,
/// 2 an inequality is violated.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitViolation = 2;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace graphiso
