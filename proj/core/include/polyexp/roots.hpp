#pragma once

#include <complex>
#include <vector>

namespace polyexp {

using Complex = std::complex<double>;

struct NumericRootOpts {
    int max_iters = 400;
    double rel_residual = 1e-12;  // certification threshold
};

// All complex roots of a dense polynomial (coefficients ascending, leading and
// constant nonzero). Companion-matrix eigenvalues for moderate degrees,
// Aberth-Ehrlich simultaneous iteration above that; every root Newton-polished
// and certified against the relative residual.
std::vector<Complex> poly_roots_numeric(const std::vector<double>& coeffs,
                                        const NumericRootOpts& opts = {});

// Horner evaluation p(z) and p'(z).
void poly_eval2(const std::vector<double>& coeffs, Complex z, Complex& p, Complex& dp);

// Relative residual |p(z)| / Σ|cᵢ||z|ⁱ.
double poly_rel_residual(const std::vector<double>& coeffs, Complex z);

}  // namespace polyexp
