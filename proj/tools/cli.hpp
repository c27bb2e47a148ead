#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lqc {

/// Runs the command line tool. Output goes to `out` unless --out names a file;
/// diagnostics go to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lqc
