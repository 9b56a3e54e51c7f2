#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace polyexp {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact conversion: every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite value");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);           // x = m * 2^exp, |m| in [0.5, 1)
    Int num = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(num);
    if (exp > 0)
        r *= Rational(Int(1) << exp);
    else if (exp < 0)
        r /= Rational(Int(1) << (-exp));
    return r;
}

// Accepts "p/q", plain integers, and decimal strings like "-1.25".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int p(s.substr(0, slash)), q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
        return Rational(p, q);
    }
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rational(Int(s));
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    size_t frac_len = s.size() - dot - 1;
    Int den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return Rational(Int(digits), den);
}

inline std::string rational_str(const Rational& r) {
    const Int& num = boost::multiprecision::numerator(r);
    const Int& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace polyexp
