// Minimal subprocess capture for exercising the CLI binary from tests.
#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace subprocess {

struct Result {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::string slurp(const std::string& path) {
  std::string data;
  if (FILE* f = std::fopen(path.c_str(), "rb")) {
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) data.append(buf.data(), n);
    std::fclose(f);
  }
  std::remove(path.c_str());
  return data;
}

inline Result run(const std::string& command) {
  static int counter = 0;
  std::string out_path = "/tmp/daglim_test_out_" + std::to_string(++counter);
  std::string err_path = "/tmp/daglim_test_err_" + std::to_string(counter);
  std::string full = command + " >" + out_path + " 2>" + err_path;
  int status = std::system(full.c_str());
  Result r;
  r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

}  // namespace subprocess
