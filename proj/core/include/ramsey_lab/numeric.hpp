#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey_lab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Natural log of a positive arbitrary-precision integer or rational. Throws
// InvalidArgument on non-positive input.
double log_of(const BigInt& x);
double log_of(const Rational& x);

// Nearest binary64 value of an exact rational.
double to_double(const Rational& x);

// Smallest k >= 0 with 2^k >= x, for x >= 1.
std::int64_t ceil_log2(const Rational& x);
std::int64_t ceil_log2(std::uint64_t x);

// "p/q" or "p" when q == 1.
std::string to_string(const Rational& x);

// Parses "p", "p/q" or a finite decimal such as "0.125" into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace ramsey_lab
