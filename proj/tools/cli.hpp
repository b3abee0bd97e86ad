#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace binmom::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Runs the command line `args` (without the program name). Normal output goes
/// to `out` unless --out redirects it to a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace binmom::cli
