#pragma once

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command capturing stdout. Redirections inside `cmd` control
// where stderr goes.
inline RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace testutil
