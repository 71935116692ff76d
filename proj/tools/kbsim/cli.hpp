#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kbsim::cli {

// Entry point behind main(): parses argv-style arguments (program name
// excluded) and executes one subcommand. Returns the process exit code:
//   0  success
//   1  usage error (malformed flags, unwritable --output)
//   2  parse error (unreadable input, .kb syntax or structure errors)
//   3  semantic error (unknown knowledge name, fewer than two knowledges)
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace kbsim::cli
