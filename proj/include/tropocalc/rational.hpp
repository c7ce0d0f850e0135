#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace tropo {

/// Exact rational scalar used throughout the library.
using Rational = mpq_class;

/// Point in Q^2.
using Point2 = std::array<Rational, 2>;

/// Integer vector in Z^2 (directions, exponents of planar polynomials).
using IVec2 = std::array<std::int64_t, 2>;

/// Parses "p/q", an integer, or a decimal literal such as "-2.25" into an exact
/// rational. Throws ParseError on malformed input.
Rational parse_rational(std::string_view text);

/// Lowest-terms text: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

Rational floor(const Rational& value);

std::int64_t gcd(std::int64_t a, std::int64_t b);

inline std::int64_t det(const IVec2& a, const IVec2& b) {
  return a[0] * b[1] - a[1] * b[0];
}

/// Divides out the gcd of the components; the zero vector is returned as is.
IVec2 primitive(const IVec2& v);

}  // namespace tropo
