#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hyperladder {

// mpq_class keeps numerator/denominator canonical (den > 0, reduced) after
// every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "p" or a plain decimal such as "0.5" into an exact rational.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational factorial(unsigned n);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace hyperladder
