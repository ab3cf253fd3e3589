#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace reconlab {

/// Exact nonnegative counts. Every bound is evaluated in this type.
using BigCount = mpz_class;
/// Exact thresholds (tau values, epsilon, probabilities).
using Rational = mpq_class;

/// Lossless conversion from a signed 64-bit value (gmpxx has no long long constructor).
inline BigCount big(long long v) { return BigCount(std::to_string(v)); }

/// Binomial coefficient with C(i, j) = 0 whenever j < 0 or j > i.
/// Negative i therefore yields 0 for every j >= 0.
BigCount binom(long long i, long long j);

/// base^exp with 0^0 = 1. Negative exponents yield 0 (empty product convention
/// is not used; callers only hit them behind a zero binomial).
BigCount ipow(long long base, long long exp);

/// ceil(a / b) and floor(a / b) for b > 0 with mathematical rounding.
long long ceil_div(long long a, long long b);
long long floor_div(long long a, long long b);

/// Smallest integer >= r.
BigCount ceil(const Rational& r);

/// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Rational& r);
std::string to_string(const BigCount& v);

/// Parses "p", "p/q" or a finite decimal like "0.5" into an exact rational.
Rational parse_rational(const std::string& text);

/// Converts to a 64-bit value, throwing PreconditionError if it does not fit.
std::uint64_t to_u64(const BigCount& v);

}  // namespace reconlab
