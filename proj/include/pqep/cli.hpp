#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pqep::cli {

/// Run one command. Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 validation errors under --strict, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pqep::cli
