#pragma once

#include <iosfwd>

namespace semicurve::cli {

inline constexpr int kOk = 0;
inline constexpr int kViolations = 1;
inline constexpr int kInputError = 2;

/// Runs one command line; JSON/CSV/text goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace semicurve::cli
