#pragma once

// Exact rational arithmetic. Backed by Boost.Multiprecision's cpp_rational
// (header-only, always normalized, positive denominator); the alias plus the
// helpers below are the only surface the rest of the code touches.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hwl {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline BigInt rat_den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline BigInt rat_floor(const Rational& x) {
    BigInt q = rat_num(x) / rat_den(x);
    if (q * rat_den(x) != rat_num(x) && x < 0) --q;
    return q;
}

// x - floor(x), in [0,1)
inline Rational rat_frac(const Rational& x) { return x - Rational(rat_floor(x)); }

// truncated decimal rendering (exact long division, no floating point);
// enough digits to situate grid gaps like 0.003449...
inline std::string decimal_string(const Rational& x, int digits = 12) {
    if (x < 0) return "-" + decimal_string(-x, digits);
    BigInt ip = rat_num(x) / rat_den(x);
    BigInt rem = rat_num(x) - ip * rat_den(x);
    std::string out = ip.str();
    if (digits <= 0) return out;
    out += '.';
    for (int i = 0; i < digits; ++i) {
        rem *= 10;
        BigInt d = rem / rat_den(x);
        rem -= d * rat_den(x);
        out += char('0' + int(d));
    }
    return out;
}

// "num/den" or plain integer; parser for CLI-provided exact values
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    }
}

} // namespace hwl
