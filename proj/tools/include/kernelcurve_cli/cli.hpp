#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitModel = 3,
  kExitNumeric = 4,
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; failures are reported on `err` as {"error_kind": ..., "message": ...}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kc::cli
