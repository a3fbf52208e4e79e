#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace ggp::cli {

enum ExitCode : int {
  kPass = 0,
  kCheckFailed = 1,
  kUsage = 2,
};

/// Environment variable holding the default worker count.
inline constexpr const char* kThreadsEnv = "GGP_THREADS";

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ggp::cli
