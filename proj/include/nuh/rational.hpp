#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nuh {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline BigInt rat_num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt rat_den(const Rational& q) { return boost::multiprecision::denominator(q); }

// floor(q) as a big integer
inline BigInt rat_floor(const Rational& q) {
    BigInt n = rat_num(q), d = rat_den(q);
    BigInt t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

// q mod 1, result in [0,1)
inline Rational mod1(const Rational& q) { return q - Rational(rat_floor(q)); }

// distance on the circle R/Z, result in [0, 1/2]
inline Rational circle_dist(const Rational& a, const Rational& b) {
    Rational d = mod1(a - b);
    if (d > Rational(1, 2)) d = Rational(1) - d;
    return d;
}

// Parses "n", "n/d" or a decimal string like "-0.125" into an exact rational.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("rational with zero denominator: " + s);
        return Rational(n, d);
    }
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) return Rational(BigInt(s));
    std::string mant = exp == std::string::npos ? s : s.substr(0, exp);
    long e10 = exp == std::string::npos ? 0 : std::stol(s.substr(exp + 1));
    dot = mant.find('.');
    std::string digits = dot == std::string::npos ? mant : mant.substr(0, dot) + mant.substr(dot + 1);
    long frac = dot == std::string::npos ? 0 : long(mant.size() - dot - 1);
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad rational: " + s);
    Rational r(BigInt(digits));
    long shift = e10 - frac;
    BigInt p10 = 1;
    for (long i = 0; i < (shift < 0 ? -shift : shift); ++i) p10 *= 10;
    return shift >= 0 ? r * Rational(p10) : r / Rational(p10);
}

inline std::string rat_str(const Rational& q) {
    std::string s = rat_num(q).str();
    if (rat_den(q) != 1) s += "/" + rat_den(q).str();
    return s;
}

inline std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b) { auto t = a % b; a = b; b = t; }
    return a;
}

} // namespace nuh
