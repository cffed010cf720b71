#pragma once

#include <iosfwd>
#include <string>

namespace casimir::cli {

enum ExitCode : int {
  kOk = 0,
  kConvergenceFailure = 1,
  kInvalidInput = 2,
  kNoSolution = 3,
};

/// Runs the command line front end. Output records go to `out` (or to the
/// file named by --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// "1um", "250nm", "2.5e-6m", "0.1mm"; a bare number is in microns. Returns m.
double parse_length(const std::string& text);

/// "291.15K", "18C"; a bare number is in K, or in Celsius when `celsius` is set. Returns K.
double parse_temperature(const std::string& text, bool celsius = false);

}  // namespace casimir::cli
