#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace posetcode::cli {

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kParameterError = 2;
inline constexpr int kPropertyFailure = 3;
inline constexpr int kBudgetExceeded = 4;

/// Full command line entry point; writes results to `out` (or the --out file)
/// and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetcode::cli
