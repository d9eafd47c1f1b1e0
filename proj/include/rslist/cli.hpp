#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rslist {

/// Runs the command line tool on the given arguments (without argv[0]).
/// Normal output goes to `out`, diagnostics to `err`.  Returns 0 on success,
/// 1 on usage errors or faults, 2 when decoding finds no codeword in range.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rslist
