#pragma once

// Command-line front end: job files in, result documents out, plus the
// verification suites, classical degrees and an expression checker.

#include <ostream>
#include <string>
#include <vector>

namespace gysin {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitMathContract = 2,
    kExitMismatch = 3,
};

/// Runs one command line (the arguments after the program name) and returns
/// the exit code. Documents go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gysin
