#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace semicurve {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (whitespace tolerated); result is canonical.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

}  // namespace semicurve
