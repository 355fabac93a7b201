#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sqpaint {

/// Runs one command line (args[0] is the program name). Output is assembled
/// and written once. Exit status: 0 success, 1 engine error or failed
/// verification, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sqpaint
