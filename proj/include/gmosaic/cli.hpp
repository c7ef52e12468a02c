#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gmosaic/verify.hpp"

namespace gmosaic::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsageError = 2;

/// Prints the per-suite table; returns kMismatch if any suite failed.
int report_verification(const std::vector<SuiteOutcome>& suites, std::ostream& out, std::ostream& err);

/// Runs the command line `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmosaic::cli
