#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qc {

enum ExitCode : int {
  kOk = 0,
  kDimensionError = 1,
  kParseError = 2,
  kAlgebraicError = 3,
  kInternalError = 4,
};

/// Runs the `qc` command line (without the program name). Results go to
/// `out`, diagnostics to `err`; `color` wraps the "error:" tag in ANSI red.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        bool color = false);

}  // namespace qc
