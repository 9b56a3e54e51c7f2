#pragma once

#include <utility>
#include <vector>

#include "polyexp/dense_poly.hpp"
#include "polyexp/poly_exponential.hpp"
#include "polyexp/roots.hpp"

namespace polyexp {

// Specialized polynomial P(z) = Q_ℓ(w) under z = e^{w/r}: integer exponents
// kᵢ = r·ℓᵢ with gcd 1, so one P-root per ≅_ℓ class.
struct SparsePolynomial {
    std::vector<std::pair<long long, Rational>> terms;  // (exponent, coeff), ascending
    Rational scale = 1;                                 // r with rℓ ∈ Z^m, gcd 1

    long long degree() const { return terms.empty() ? 0 : terms.back().first; }
    RationalPoly dense() const;
};

struct SpectrumClass {
    Complex w;        // representative, Im(w) ∈ [0, 2πr)
    Complex t;        // underlying polynomial root, t = e^{w/r}
    int multiplicity = 1;
    Rational scale = 1;
    double residual = 0;  // |Q_ℓ(w)|
};

class OrderedSpectrum {
public:
    explicit OrderedSpectrum(std::vector<double> re_sorted) : re_(std::move(re_sorted)) {}
    size_t size() const { return re_.size(); }
    const std::vector<double>& reals() const { return re_; }
    // i-th from the right / left, 1-based; throws OutOfRange past the list.
    double rho(size_t i) const;
    double lambda(size_t i) const;

private:
    std::vector<double> re_;
};

SparsePolynomial specialize(const PolyExponential& q, const ParamPoint& ell);

// Nonzero roots with multiplicities; multiplicities from exact squarefree
// decomposition, values from the numeric solve of each squarefree factor.
std::vector<std::pair<Complex, int>> poly_roots(const SparsePolynomial& p);

std::vector<SpectrumClass> spectrum_classes(const PolyExponential& q, const ParamPoint& ell);

OrderedSpectrum rho_lambda(const PolyExponential& q, const ParamPoint& ell);

bool congruent(Complex w1, Complex w2, const ParamPoint& ell, double tol);

}  // namespace polyexp
