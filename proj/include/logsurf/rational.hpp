#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace logsurf {

// Exact arbitrary-precision arithmetic. Every quantity in the library is a
// Rational; no floating point is used anywhere, so threshold comparisons
// (discrepancy >= -1, coefficient <= 1, ...) are exact decisions.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q" or "p" with an optional leading minus sign. The denominator
/// must be a positive integer literal. Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Renders a rational in reduced form: "p/q", or "p" when the denominator
/// is one. This is the only serialization used across the library.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

/// Requires is_integer(value).
BigInt to_integer(const Rational& value);

}  // namespace logsurf
