#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "thetaq/errors.hpp"

namespace thetaq {

// Exact rational arithmetic on arbitrary-precision integers. cpp_rational
// keeps gcd(|num|, den) = 1 and den >= 1 at all times, which is exactly the
// canonical form the rest of the library relies on for map keys and equality.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    return Rational(num, den);
}

inline BigInt rat_num(const Rational& r) { return numerator(r); }
inline BigInt rat_den(const Rational& r) { return denominator(r); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Largest integer <= r.
inline BigInt rational_floor(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

inline long long to_long(const BigInt& v) { return v.convert_to<long long>(); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline long long lcm_ll(long long a, long long b) {
    BigInt g = boost::multiprecision::gcd(BigInt(a), BigInt(b));
    return to_long(BigInt(a) / g * BigInt(b));
}

inline std::string to_string(const Rational& r) {
    std::string s = rat_num(r).str();
    if (!is_integer(r)) s += "/" + rat_den(r).str();
    return s;
}

} // namespace thetaq
