#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qweyl::cli {

/// Runs the command line `qweyl <args...>` (program name excluded).
/// Returns the process exit code: 0 success, 1 verification failure or
/// disagreement, 2 usage or parse error, 3 guard violation.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qweyl::cli
