// Copyright (c) tfstatus contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tfstatus {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_failed = 1,      ///< validation failure or violated bounds
    exit_input_error = 2, ///< bad arguments, unreadable or malformed input
};

/// Runs one CLI invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tfstatus
