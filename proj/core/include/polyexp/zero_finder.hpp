#pragma once

#include <vector>

#include "polyexp/poly_exponential.hpp"

namespace polyexp {

struct Rectangle {
    double x0, x1, y0, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(Complex w) const {
        return w.real() > x0 && w.real() < x1 && w.imag() > y0 && w.imag() < y1;
    }
};

struct LocatedZero {
    Complex w;
    int multiplicity = 1;
    double residual = 0;
};

struct ZeroFinderOpts {
    double cluster_tol = 1e-7;
    double residual_tol = 1e-10;
    double boundary_tol = 1e-8;
    int max_depth = 64;
    int perturb_retries = 8;
};

// Lemma-3.1.5-style strip: every zero has C₋ ≤ Re(w) ≤ C₊.
// C₊ = max(0, ln(m·M/|a_m|)/(ℓ_m−ℓ_{m−1})), C₋ = min(0, ln(|a₀|/(m·M'))/ℓ_min).
std::pair<double, double> strip_bounds(const ConcretePolyExp& qc);

// Winding number of Q over ∂rect (zeros counted with multiplicity inside).
// Throws ZeroOnBoundary when |Q| dips below the boundary tolerance on ∂rect.
int count_zeros(const ConcretePolyExp& qc, const Rectangle& rect, const ZeroFinderOpts& opts = {});

// All zeros inside rect, via adaptive quadrisection with deterministic
// golden-ratio perturbation of split lines; boundary failures on the outer
// rectangle are retried by slight outward expansion.
std::vector<LocatedZero> zeros_in_rect(const ConcretePolyExp& qc, Rectangle rect,
                                       const ZeroFinderOpts& opts = {});

// Zeros with Im(w) in the fundamental band [0, T) (window shifted by a tiny
// deterministic offset so each periodicity class appears exactly once).
std::vector<LocatedZero> zeros_in_band(const ConcretePolyExp& qc, double T,
                                       const ZeroFinderOpts& opts = {});

}  // namespace polyexp
