#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qmzv {

/// Dispatches one CLI invocation. Exit codes: 0 success, 1 domain error,
/// 2 usage error, 3 invariant-violation report.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmzv
