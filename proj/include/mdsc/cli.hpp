// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mdsc {

/// Exit codes shared by every subcommand and output format.
enum ExitCode : int {
    exit_ok = 0,
    exit_failed = 1,  // a property, claim or cross-check failed
    exit_usage = 2,   // bad arguments or input
    exit_budget = 3,  // brute-force budget exceeded
};

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mdsc
