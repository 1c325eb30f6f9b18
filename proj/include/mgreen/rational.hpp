#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mgreen {

/// Arbitrary-precision rational; every quantity in the library is exact.
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). The
/// result is canonicalized. Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering with exactly `digits` fractional digits, rounded half
/// away from zero. Display only.
std::string to_decimal(const Rational& value, int digits);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace mgreen
