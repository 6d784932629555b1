#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fl {

/// Dispatches one CLI invocation. Exit status contract: 0 = yes/success,
/// 1 = no (or inequivalent, with the witness printed), 2 = usage error,
/// 3 = any other error (validation, parse, resource, divergence). A Turing
/// machine timeout reports status 2 with the verdict printed, since it is
/// neither acceptance nor rejection.
int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace fl
