#pragma once

#include <ostream>

namespace qfano::cli {

inline constexpr int kOk = 0;
inline constexpr int kInvariant = 1;
inline constexpr int kUsage = 2;

// Entry point of the qfano tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfano::cli
