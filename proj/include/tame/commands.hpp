#pragma once

// The subcommands behind the CLI. Every command writes one JSON report;
// the exit code is 0 on pass, 1 on a law failure and 2 on an input error.

#include <string>
#include <vector>

namespace tame {

struct CommandOutput {
  int exit_code = 0;
  std::string report;  // JSON text, newline terminated
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitLawFailure = 1;
inline constexpr int kExitInputError = 2;

/// args[0] is the subcommand. Arguments naming documents or JSON values
/// accept either a file path or inline JSON.
CommandOutput run_command(const std::vector<std::string>& args);

const std::vector<std::string>& command_names();

}  // namespace tame
