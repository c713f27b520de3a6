#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace smtkit {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denom(q) == 1; }

// "p" for integers, "p/q" otherwise. Always reduced.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on junk or zero denominator.
Rational parse_rational(std::string_view text);

Integer floor_div(const Rational& q);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

}  // namespace smtkit
