#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace commensurate::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_mismatch = 1,
  exit_usage = 2,
  exit_precision = 3,
  exit_contract = 4,
};

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace commensurate::cli
