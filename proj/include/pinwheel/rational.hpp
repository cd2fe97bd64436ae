#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pinwheel {

// Exact arithmetic only: there is no floating point anywhere in the library.
// cpp_rational keeps values reduced with a positive denominator, which is
// exactly the normal form the rest of the code relies on.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "p/q", "-p/q". Throws ParseError on malformed input or q == 0.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& value);

inline Rational rat(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

} // namespace pinwheel
