#include "spectile/numeric.hpp"

#include "spectile/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace spectile {

Int floor_rat(const Rational& q) {
  Int n = numerator_of(q);
  Int d = denominator_of(q);
  if (d == 1) return n;
  Int quo = n / d;  // truncates toward zero
  if (n < 0) --quo;
  return quo;
}

Rational frac_part(const Rational& q) { return q - Rational(floor_rat(q)); }

Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t pos = 0;
  auto read_integer = [&]() -> Int {
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = (text[pos] == '-');
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos == start) throw ParseError("malformed rational literal: " + std::string(text));
    Int value(std::string(text.substr(start, pos - start)));
    return negative ? Int(-value) : value;
  };
  Int num = read_integer();
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') throw ParseError("malformed rational literal: " + std::string(text));
  ++pos;
  Int den = read_integer();
  if (pos != text.size()) throw ParseError("malformed rational literal: " + std::string(text));
  if (den == 0) throw ParseError("zero denominator in rational literal: " + std::string(text));
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  std::string out = numerator_of(q).str();
  Int d = denominator_of(q);
  if (d != 1) {
    out += '/';
    out += d.str();
  }
  return out;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace spectile
