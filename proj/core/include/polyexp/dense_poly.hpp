#pragma once

#include <cstdint>
#include <vector>

#include "polyexp/rational.hpp"

namespace polyexp {

// Dense univariate polynomial over Q, coefficients ascending. Used for exact
// squarefree decomposition and the graph-module characteristic polynomials.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static RationalPoly monomial(size_t k, Rational coeff = Rational(1));

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    const Rational& leading() const { return c_.back(); }

    RationalPoly derivative() const;
    RationalPoly monic() const;
    // Order of vanishing at 0 (number of leading zero coefficients).
    size_t ord0() const;
    RationalPoly shifted_down(size_t k) const;  // divide by t^k (requires ord0 >= k)

    friend RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator-(const RationalPoly& a, const RationalPoly& b);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
    friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

    // Euclidean division; remainder returned, quotient optional out-param.
    RationalPoly mod(const RationalPoly& d, RationalPoly* quotient = nullptr) const;

    std::vector<double> to_doubles() const;
    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

RationalPoly poly_gcd(RationalPoly a, RationalPoly b);  // monic gcd

// Yun squarefree decomposition: returns factors f₁, f₂, … with
// p = lc · Π fᵢ^i, each fᵢ squarefree and monic (possibly constant 1).
std::vector<RationalPoly> squarefree_decomposition(const RationalPoly& p);

// Fast certificate: gcd(p, p') = 1 over Z/q for a 62-bit prime q not dividing
// lc(p) implies p squarefree over Q. Returns true only when certified.
bool squarefree_certificate(const RationalPoly& p);

}  // namespace polyexp
