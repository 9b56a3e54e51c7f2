#pragma once

#include <map>

#include "polyexp/dense_poly.hpp"
#include "polyexp/linear_form.hpp"
#include "polyexp/poly_exponential.hpp"

namespace polyexp {

// Σ c·t^{L} with integer-valued rational coefficients and LinearForm exponents.
// Houses Perron-matrix entries and symbolic Perron polynomials.
class ExponentPolynomial {
public:
    ExponentPolynomial() = default;
    explicit ExponentPolynomial(Rational constant) {
        if (constant != 0) terms_[LinearForm()] = std::move(constant);
    }
    static ExponentPolynomial monomial(LinearForm exp, Rational coeff = Rational(1)) {
        ExponentPolynomial p;
        if (coeff != 0) p.terms_[std::move(exp)] = std::move(coeff);
        return p;
    }

    const std::map<LinearForm, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    ExponentPolynomial& operator+=(const ExponentPolynomial& o);
    ExponentPolynomial& operator-=(const ExponentPolynomial& o);
    friend ExponentPolynomial operator+(ExponentPolynomial a, const ExponentPolynomial& b) {
        return a += b;
    }
    friend ExponentPolynomial operator-(ExponentPolynomial a, const ExponentPolynomial& b) {
        return a -= b;
    }
    friend ExponentPolynomial operator*(const ExponentPolynomial& a, const ExponentPolynomial& b);
    friend bool operator==(const ExponentPolynomial& a, const ExponentPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    // Specialize at integer/rational exponent values: dense polynomial in t.
    // All instantiated exponents must be nonnegative integers.
    RationalPoly specialize_int(const ParamPoint& pt) const;

    // Numeric evaluation Σ c·t^{L(pt)}.
    Complex eval(const ParamPoint& pt, Complex t) const;

    std::string str() const;

private:
    std::map<LinearForm, Rational> terms_;
};

}  // namespace polyexp
