#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heapkit::cli {

/// Exit codes of `run`.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (without the program name). JSON or DOT goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heapkit::cli
