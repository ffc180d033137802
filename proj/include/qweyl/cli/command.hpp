#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qweyl::cli {

// Runs one qweyl invocation (argv without the program name) and returns
// the exit code: 0 all items pass, 1 some item fails, 2 usage or parse
// error. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Merges a key=value config file into args: every key not already given as
// --key on the command line is appended as --key=value.
std::vector<std::string> merge_config(const std::vector<std::string>& args);

}  // namespace qweyl::cli
