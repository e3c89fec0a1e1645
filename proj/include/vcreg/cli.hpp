#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vcreg {

// Runs one CLI invocation.  Reports go to `out` as JSON (CSV for sweep),
// diagnostics and timing to `err`.
// Exit codes: 0 success, 1 error, 2 precondition refusal, 64 usage.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace vcreg
