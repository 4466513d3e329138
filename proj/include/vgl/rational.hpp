#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace vgl {

/// Exact rational in canonical form (gcd-reduced, positive denominator).
using Rational = mpq_class;
/// Arbitrary precision integer.
using Integer = mpz_class;

/// Parses "num" or "num/den" (optional leading '-') into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& value);

/// Natural logarithm of a positive rational, accurate even when numerator and
/// denominator overflow a double.
double log_rational(const Rational& value);

/// num/den in canonical form; den must be nonzero.
inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_pow(const Rational& base, unsigned long exponent);

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace vgl
