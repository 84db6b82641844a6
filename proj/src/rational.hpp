#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "errors.hpp"

namespace kzr {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor toward -infinity
inline Int rat_floor(const Rational& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n % d != 0 && n < 0) --q;
    return q;
}

// fractional part <x> = x - floor(x), always in [0,1)
inline Rational frac(const Rational& x) {
    return x - Rational(rat_floor(x));
}

inline bool is_integer(const Rational& x) { return denominator(x) == 1; }

std::string rat_to_string(const Rational& x);

// Accepts "r", "-r" or "r/s" with nonzero s.
Rational parse_rational(const std::string& text);

}  // namespace kzr
