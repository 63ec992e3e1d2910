#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace spectile {

// Exact integer and rational scalars. Rationals are kept in lowest terms
// with a positive denominator by the backend; every coordinate in this
// library is one of these, so all predicates are decidable.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator_of(q) == 1; }

// Largest integer <= q.
Int floor_rat(const Rational& q);

// q - floor(q), always in [0, 1).
Rational frac_part(const Rational& q);

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

// Parses "p/q" or "p" with optional sign; throws ParseError on anything else
// (including q = 0 and embedded whitespace).
Rational parse_rational(std::string_view text);

// Lowest-terms rendering: integers as "p", everything else as "p/q".
std::string format_rational(const Rational& q);

double to_double(const Rational& q);

}  // namespace spectile
