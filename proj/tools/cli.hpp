#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kissgeo::cli {

enum ExitCode : int {
  kOk = 0,
  /// Certified infeasible, not embeddable, not chordal, or no witness.
  kInfeasible = 1,
  kBadInput = 2,
  kNumericalFailure = 3,
};

/// Runs one command line (without the program name). Input paths of "-"
/// read `in`; JSON results go to `out` unless -o names a file; diagnostics
/// go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kissgeo::cli
