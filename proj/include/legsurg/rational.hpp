#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace legsurg {

// Exact arithmetic backbone. Rational is always stored reduced with a
// positive denominator; Integer is unbounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    return Rational(num) / Rational(den);  // normalizes sign and reduces
}

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline Integer rat_floor(const Rational& r) {
    Integer q = numerator(r) / denominator(r);  // truncates toward zero
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline Integer rat_ceil(const Rational& r) { return -rat_floor(-r); }

// Renders "p" when integral, "p/q" otherwise; q always positive.
std::string rat_str(const Rational& r);

// Accepts "p" or "p/q" with optional leading sign; throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace legsurg
