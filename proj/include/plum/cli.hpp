#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plum::cli {

enum ExitCode { pass = 0, fail = 1, usage = 2, unresolved = 3 };

/// Runs one command (arguments without the program name) and writes a
/// single JSON report to `out`; usage text goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plum::cli
