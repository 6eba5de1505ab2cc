#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psw::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,  // a mathematical check failed
  kUsage = 2,      // bad flags or unparsable input
};

/// Runs one command line (args excludes the program name) and returns the
/// exit code. Output goes to out, diagnostics to err; `sweep --input -` and
/// `lorentzian --poly -` read from in.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace psw::cli
