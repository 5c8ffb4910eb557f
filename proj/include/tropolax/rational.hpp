#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace tropolax {

// Arbitrary-precision rational, kept in canonical reduced form by the
// backing type. Everything in this library is exact; no floating point
// appears on any value path.
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q"
// with gcd(p, q) = 1 and q > 0.
std::string rational_str(const Rational& r);

// Parses the canonical forms above (optionally signed). Throws
// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace tropolax
