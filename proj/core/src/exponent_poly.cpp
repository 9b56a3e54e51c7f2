#include "polyexp/exponent_poly.hpp"

#include <cmath>
#include <sstream>

namespace polyexp {

ExponentPolynomial& ExponentPolynomial::operator+=(const ExponentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExponentPolynomial& ExponentPolynomial::operator-=(const ExponentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

ExponentPolynomial operator*(const ExponentPolynomial& a, const ExponentPolynomial& b) {
    ExponentPolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            LinearForm e = ea + eb;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_[e] = ca * cb;
            } else {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

RationalPoly ExponentPolynomial::specialize_int(const ParamPoint& pt) const {
    std::vector<Rational> c;
    for (const auto& [e, coeff] : terms_) {
        Rational v = e.evaluate([&](const std::string& n) -> Rational {
            return pt.is_exact() ? pt.exact_value_of(n) : rational_from_double(pt.value_of(n));
        });
        if (boost::multiprecision::denominator(v) != 1 || v < 0)
            throw OutOfRange("exponent " + rational_str(v) + " is not a nonnegative integer");
        size_t k = boost::multiprecision::numerator(v).convert_to<size_t>();
        if (c.size() <= k) c.resize(k + 1, Rational(0));
        c[k] += coeff;
    }
    return RationalPoly(std::move(c));
}

Complex ExponentPolynomial::eval(const ParamPoint& pt, Complex t) const {
    Complex acc = 0;
    for (const auto& [e, coeff] : terms_) {
        double v = e.evaluate([&](const std::string& n) -> double { return pt.value_of(n); });
        acc += to_double(coeff) * std::pow(t, v);
    }
    return acc;
}

std::string ExponentPolynomial::str() const {
    if (terms_.empty()) return "0";
    // Display highest exponent first when a natural order exists; the map
    // iterates in LinearForm key order, so reverse for a leading-term-first look.
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e.is_zero()) {
            os << rational_str(mag);
            continue;
        }
        if (mag != 1) os << rational_str(mag) << "*";
        std::string es = e.str();
        bool simple = es.find(' ') == std::string::npos && es.find('-') == std::string::npos;
        os << "t^" << (simple ? es : "(" + es + ")");
    }
    return os.str();
}

}  // namespace polyexp
