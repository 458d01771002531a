#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankmine::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kDataError = 1, kUsageError = 2 };

/// Runs one command line (argv[0] is the program name). Results go to `out`
/// unless --output is given; diagnostics, timings and counts go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankmine::cli
