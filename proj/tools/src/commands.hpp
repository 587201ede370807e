#pragma once

#include <iosfwd>

namespace pathmaj::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

/// Entry point of the pathmaj tool: build, query, verify, gen, bench.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pathmaj::cli
