// Command-line front end: classify, denote, nsp, free-monoid, probe, verify.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vna {

// Exit codes: 0 success, 1 verification failure, 2 usage error.
// Reports go to `out`; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vna
