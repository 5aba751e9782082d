#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curvemod {

// Runs one command line (without the program name). Writes a JSON report to
// out and diagnostics to err. Exit codes: 0 success, 2 input error,
// 3 ExtensionTooLarge or NoConvergence, 1 internal error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Splits a line on whitespace, honouring double quotes.
std::vector<std::string> split_command_line(const std::string& line);

} // namespace curvemod
