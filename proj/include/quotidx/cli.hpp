#ifndef QUOTIDX_CLI_HPP
#define QUOTIDX_CLI_HPP

#include <iosfwd>

#include "quotidx/oracle.hpp"
#include "quotidx/problem.hpp"

namespace quotidx {

struct RunOptions {
  std::uint64_t seed = 1;
  double tol_root = 1e-10;
  double tol_classify = 1e-6;
  int max_degree = 4;
  bool with_oracle = false;
};

// Exit codes of the command dispatcher.
enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kNonIsolated = 3,
  kVerificationFailure = 4,
};

// Runs `signature`, `quantum`, `oracle-check`, or `burnside` on a parsed
// description, writing the report to `out` and diagnostics to `err`.
int run_command(const std::string &command, const ProblemDescription &desc,
                const RunOptions &options, std::ostream &out, std::ostream &err);

}  // namespace quotidx

#endif
