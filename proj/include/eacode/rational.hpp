#pragma once

#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace eacode {

using Rational = boost::rational<std::int64_t>;

/// "p/r", or "p" when the denominator is 1.
std::string to_string(const Rational& x);
/// Accepts "p", "p/r" and finite decimals such as "0.75". Throws BadFormat.
Rational parse_rational(const std::string& s);
/// Fixed-point rendering rounded half away from zero, e.g. 5/14 -> "0.357143".
std::string to_decimal(const Rational& x, int digits = 6);

}  // namespace eacode
