#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcospan {

// Runs one subcommand (args exclude the program name), writing result
// documents to out and diagnostics to err. Returns the process exit code:
// 0 success, 1 negative answer or failed law suite, 2 malformed input or
// invocation, 3 isomorphism search budget exhausted.
int runCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace dcospan
