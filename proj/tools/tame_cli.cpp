// tame-cli <command> [options]: prints the JSON report of the command and
// exits 0 on pass, 1 on a law failure and 2 on an input error.

#include <cstdio>
#include <vector>

#include "tame/tame.h"

int main(int argc, char** argv) {
  std::vector<const char*> args(argv + 1, argv + argc);
  char* report = nullptr;
  int exit_code = 2;
  const tame_status st =
      tame_run_command(static_cast<int>(args.size()), args.data(), &report, &exit_code);
  if (st != TAME_OK) {
    std::fprintf(stderr, "tame-cli: %s: %s\n", tame_status_name(st), tame_last_error_message());
    return 2;
  }
  std::fputs(report, stdout);
  tame_free_string(report);
  return exit_code;
}
