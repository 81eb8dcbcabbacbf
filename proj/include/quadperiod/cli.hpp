#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qp {

// Runs the command-line interface against the given argument list (without
// argv[0]). Payload goes to `out`, diagnostics to `err`.
// Exit codes: 0 success, 1 usage error, 2 audit failure, 3 precision cap
// exhausted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qp
