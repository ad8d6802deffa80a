#pragma once

#include <string>
#include <vector>

namespace ggx::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

// Runs one ggx invocation; `args` excludes the program name.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace ggx::tools
