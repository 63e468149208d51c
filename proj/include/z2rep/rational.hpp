#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace z2rep {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q" or an integer string. Decimal input is rejected.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form with q > 0 and gcd(|p|, q) = 1; integers print as "p/1".
std::string to_string(const Rational& value);

Rational binomial(long n, long k);

/// Integer power with the convention x^0 = 1 (including 0^0).
Rational power(const Rational& base, unsigned exponent);

inline int sign_of_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace z2rep
