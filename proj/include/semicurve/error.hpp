#pragma once

#include <stdexcept>

namespace semicurve {

/// Raised when an input does not describe a valid object (bad gap list,
/// gcd > 1, malformed polynomial, ...). The CLI maps it to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace semicurve
