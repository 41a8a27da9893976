#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace ikit {

/// Arbitrary-precision rational. GMP keeps it canonical: the denominator is
/// positive and coprime to the numerator after every operation.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer =
    boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

/// Parses "12", "-0.6", "3.3928", "1.5e-3", "+7/4" exactly.
/// Throws ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);

/// Decimal rendering rounded to `digits` places after the point. For display only.
std::string to_decimal(const Rational& value, int digits = 6);

inline int sign(const Rational& value) { return value.sign(); }

inline Rational abs_value(const Rational& value) { return value.sign() < 0 ? Rational(-value) : value; }

double to_double(const Rational& value);

/// 2^-bits as an exact rational.
Rational pow2_inverse(unsigned bits);

}  // namespace ikit
