#ifndef ZFORM_TEST_CLI_HELPERS_HPP
#define ZFORM_TEST_CLI_HELPERS_HPP

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace zform::test {

struct CliResult {
  int code = -1;
  std::string out;  ///< stdout only; stderr is discarded
};

/// Runs the built `zform` binary with `args` (already shell-quoted).
inline CliResult run_cli(const std::string& args)
{
  const std::string cmd = std::string("'") + ZFORM_CLI + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  CliResult r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path);
  out << text;
}

}  // namespace zform::test

#endif
