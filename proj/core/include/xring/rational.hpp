#pragma once

#include <gmpxx.h>

#include <string>

namespace xring {

// All coefficient arithmetic in the engine is exact. Integers and rationals
// are GMP values; everything built on top keeps them in canonical form
// (gcd(num, den) = 1, den >= 1 -- mpq_class maintains this after
// canonicalize()).
using Int = mpz_class;
using Rational = mpq_class;

/// Builds a canonical rational from numerator and denominator.
/// Throws std::domain_error if den == 0.
Rational make_rational(const Int& num, const Int& den);

/// Parses "p" or "p/q" (arbitrary precision). Throws std::invalid_argument
/// on malformed input.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& r);
std::string to_string(const Int& n);

/// Checked narrowing; throws std::overflow_error if n does not fit.
long to_long(const Int& n);

/// Smallest integer s with s*s >= n (n >= 0).
Int ceil_sqrt(const Int& n);

/// A rational u with u*u >= r and u within 10^-digits of sqrt(r); r >= 0.
Rational rational_sqrt_upper(const Rational& r, unsigned digits = 6);

/// Decimal representation of r rounded up (toward +infinity) at `digits`
/// fractional places, so the printed value is >= r. r must be >= 0.
std::string decimal_upper(const Rational& r, unsigned digits = 6);

}  // namespace xring
