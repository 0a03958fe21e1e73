#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace scientrix {

// Exact arithmetic for ranks, percentile values and thresholds. Rounding
// happens only when a value is formatted for output.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses decimal text ("50.7", "-0.25", "12") into an exact rational.
Rational parse_decimal(std::string_view text);

// round(value * 10^decimals) with halves rounded up (toward +infinity).
BigInt round_half_up_scaled(const Rational& value, int decimals);

// Fixed-point text with `decimals` digits, round-half-up convention.
std::string format_fixed(const Rational& value, int decimals);

double to_double(const Rational& value);

}  // namespace scientrix
