#pragma once

// Command-line front end. `run` is the whole program minus process plumbing,
// so tests can drive it with in-memory streams.

#include <ostream>
#include <string>
#include <vector>

namespace matnum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitInternal = 3;

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace matnum::cli
