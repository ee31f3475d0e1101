#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fracdim {

/// Exact rational. mpq_class keeps the fraction in lowest terms with a
/// positive denominator as long as values are built through parse_scalar or
/// arithmetic (raw "p/q" construction must be canonicalized).
using Scalar = mpq_class;

/// Bits used when an irrational quantity is snapped onto the dyadic grid.
inline constexpr int kDefaultRoundingBits = 96;

/// Parses "p/q", "p", or "-p/q". Throws Error(ParseError).
Scalar parse_scalar(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar& value);

double to_double(const Scalar& value);

/// Natural logarithm of a positive rational. Works far outside the double
/// range (e.g. 3^-2000) by splitting mantissa and binary exponent.
double log_of(const Scalar& value);

Scalar pow_int(const Scalar& base, long exponent);

/// Nearest multiple of 2^-bits to n^-alpha. Exact when alpha is a
/// non-negative integer; otherwise evaluated with MPFR at bits + 64 bits of
/// working precision before rounding.
Scalar inverse_power(unsigned long n, double alpha, int bits = kDefaultRoundingBits);

/// Nearest multiple of 2^-bits to value.
Scalar round_to_dyadic(double value, int bits = kDefaultRoundingBits);

Scalar midpoint(const Scalar& a, const Scalar& b);

}  // namespace fracdim
