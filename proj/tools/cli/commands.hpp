#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chebvar/suites.hpp"

namespace chebvar::cli {

/// Exit statuses of the command-line tool.
enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2 };

/// 0 when every case passed, 1 otherwise.
int suite_exit_status(const suites::SuiteResult& r);

/// Parses `args` (without the program name) and runs the subcommand.
/// Regular output goes to `out`, diagnostics and timings to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chebvar::cli
