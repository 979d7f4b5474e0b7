#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cox {

// Runs one command (arguments without the program name). JSON goes to out,
// human-readable tables and diagnostics to err. Returns the process exit code:
// 0 success, 1 failed mathematical check, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace cox
