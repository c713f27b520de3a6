#include "smtkit/rational.hpp"

#include <stdexcept>

namespace smtkit {

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numer(q).str();
  return numer(q).str() + "/" + denom(q).str();
}

namespace {
Integer parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer: " + std::string(s));
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("bad integer: " + std::string(s));
  std::string digits(s.substr(s[0] == '+' ? 1 : 0));
  return Integer(digits);
}
}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer p = parse_integer(text.substr(0, slash));
  Integer q = parse_integer(text.substr(slash + 1));
  if (q == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(p, q);
}

Integer floor_div(const Rational& q) {
  Integer n = numer(q), d = denom(q);
  Integer r = n / d;  // truncates toward zero
  if (n < 0 && r * d != n) r -= 1;
  return r;
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }
Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

}  // namespace smtkit
