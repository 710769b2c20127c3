#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcstar {

// Exact rational coefficient field. Every algebraic identity in this library
// is checked with operator==, never with a tolerance, so the scalar type must
// normalize eagerly: lowest terms, positive denominator.
// boost::multiprecision::cpp_rational guarantees both.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Thrown by the text parsers (rationals, form literals, polynomials).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

// (-1)^k as an exact rational.
inline Rational sign_pow(long long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

// Accepts "3", "-7", "2/5", "-2/5". Returns nullopt on malformed input or a
// zero denominator.
std::optional<Rational> parse_rational(std::string_view text);

// Lowest-terms rendering: "3", "-2/5"; integers print without a slash.
std::string to_string(const Rational& value);

}  // namespace gcstar
