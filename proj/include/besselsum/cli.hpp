#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace besselsum {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitDomain = 2, kExitTolerance = 3 };

/// Runs the besselsum command line; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default summation tolerance: BESSELSUM_TOL if set, else 1e-12.
double default_tolerance();

}  // namespace besselsum
