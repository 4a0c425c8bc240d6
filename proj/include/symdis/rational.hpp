#pragma once
// Exact rational arithmetic helpers. All probability and error arithmetic in
// this project is arbitrary-precision rational; floating point appears only
// in display rendering and in degree-selection formulas.
#include <gmpxx.h>

#include <string>

namespace symdis {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer "p", or a plain decimal like "0.25" into an
/// exact rational. Throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

/// Canonical "p/q" rendering (denominator always present, e.g. "3/1").
std::string to_fraction_string(const Rational& q);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& q, int sig_digits = 12);

/// Exact base^e for nonnegative integer exponents.
Rational pow_rational(const Rational& base, unsigned long e);

/// ln(q) evaluated in long double; q must be positive.
long double log_rational(const Rational& q);

}  // namespace symdis
