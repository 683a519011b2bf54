#pragma once

#include <cmath>
#include <cstdio>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace primwords {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

/// "p/q" in lowest terms, or "p" when q = 1.
inline std::string to_decimal(const Rational& x) {
    const BigInt num = boost::multiprecision::numerator(x);
    const BigInt den = boost::multiprecision::denominator(x);
    return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

/// Rounds to 12 significant digits so serialized reports are stable.
inline double round12(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

inline BigInt big_pow(long base, unsigned exponent) {
    BigInt r = 1;
    BigInt b = base;
    while (exponent) {
        if (exponent & 1u) {
            r *= b;
        }
        b *= b;
        exponent >>= 1u;
    }
    return r;
}

}  // namespace primwords
