#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linfield {

// Runs the command-line tool on the given arguments (program name excluded)
// and returns the process exit code: 0 on success, 1 on invalid input or an
// infeasible request, 2 when a cross-check that should be a theorem fails.
// All output goes through the supplied streams, which keeps the tool
// scriptable and testable.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace linfield
