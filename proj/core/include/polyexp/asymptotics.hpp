#pragma once

#include <limits>
#include <vector>

#include "polyexp/continuation.hpp"
#include "polyexp/poly_exponential.hpp"
#include "polyexp/zero_finder.hpp"

namespace polyexp {

struct IntervalSet {
    std::vector<std::pair<double, double>> intervals;  // disjoint, sorted

    bool contains(double x, double slack = 0) const {
        for (auto [a, b] : intervals)
            if (x >= a - slack && x <= b + slack) return true;
        return false;
    }
    double sup() const;  // throws OutOfRange when empty
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponent vector with entries in (0, ∞]; pairs up with the term list of a Q.
struct ExtendedParam {
    std::vector<double> entries;

    size_t size() const { return entries.size(); }
    bool is_finite(size_t i) const { return entries[i] != kInf; }
};

struct BoundaryZero {
    Complex w;
    int multiplicity;
    enum class Side { Left, Right, AxisAmbiguous } side;
};

struct BoundarySpectrum {
    std::vector<BoundaryZero> left;   // ℤ₋(Q,p): Re < 0
    std::vector<BoundaryZero> right;  // −ℤ₋(Q̄,q): Re > 0
    std::vector<BoundaryZero> axis_ambiguous;
    double band = 0;
};

struct GrowthClassification {
    enum class Kind { LeftRate, RightRate, Bounded } kind;
    double lambda = 0;                 // fitted rate (positive for the rate cases)
    double alt_fit = 0;                // the §4.2-style 1/(min(ℓ̄)·γ) diagnostic fit
    Complex matched_boundary_zero{std::numeric_limits<double>::quiet_NaN(), 0};
    double match_error = std::numeric_limits<double>::quiet_NaN();
};

// Λ(p) ∩ [A,B] via the polygon-moduli criterion:
// x ∈ Λ(p) iff 2·maxⱼ rⱼ(x) ≤ Σⱼ rⱼ(x) with r₀=|a₀|, rᵢ=|aᵢ|e^{pᵢx}.
// Terms are kept unmerged: each carries its own phase in Prop-3.2.1's criterion.
IntervalSet limit_set(const PolyExponential& q, const ParamPoint& p, double window_lo,
                      double window_hi);

// Same criterion on an explicit (coeff, exponent) list.
IntervalSet limit_set_raw(const std::vector<std::pair<double, double>>& coeff_exp,
                          double window_lo, double window_hi);

// ℤ(p,q) = ℤ₋(Q,p) ∪ −ℤ₋(Q̄,q), infinite exponents dropping their terms.
// p pairs with Q's term exponents; q pairs with the bar order (a₀, a₁, …, a_{m−1}).
BoundarySpectrum boundary_spectrum(const std::vector<double>& coeffs /* a₀..a_m */,
                                   const ExtendedParam& p, const ExtendedParam& q, double T,
                                   double axis_tol = 1e-9,
                                   const ZeroFinderOpts& zopts = {});

struct GrowthSample {
    double x;         // path parameter, ↓0 toward the boundary
    double min_l;     // min of the instantiated exponents
    double min_lbar;  // min of the barred exponents
    Complex w;
};

struct GrowthOpts {
    double stability_rel = 5e-2;  // max relative spread for a fit to count as stable
    double bounded_cap = 1e3;     // |Re| cap for the bounded classification
    double match_tol = 1e-3;
};

// Corollary-1 classification from trajectory samples against a boundary spectrum.
GrowthClassification growth_rate(const std::vector<GrowthSample>& samples,
                                 const BoundarySpectrum& boundary, const GrowthOpts& opts = {});

// ω(ℓ): largest real x with e^{ℓ₁x} = Σ_{i≥2} e^{ℓᵢx} + 1 (ℓ₁ dominant).
double perron_frontier(const std::vector<double>& ell);

}  // namespace polyexp
