#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mvprob {

/// Runs one command-line invocation (arguments exclude the program name).
/// Exit codes: 0 success, 1 a check failed, 2 bad input, 3 budget exceeded,
/// 4 internal inconsistency.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvprob
