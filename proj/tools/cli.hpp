#pragma once

#include <ostream>

namespace quadirr::cli {

// Exit codes: 0 success, 1 mismatch or failed identity, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

// Entry point shared by the executable and the in-process tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace quadirr::cli
