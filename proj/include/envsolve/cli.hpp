#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace envsolve::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,      // e.g. a failed --check
  kUsage = 2,        // malformed flags or values
  kConvergence = 3,  // solver did not converge
  kDomain = 4,       // input outside the mathematical domain
  kIo = 5,           // unreadable input / unwritable output
};

/// Entry point behind the `envsolve` binary. `args` excludes the program name.
/// JSON results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace envsolve::cli
