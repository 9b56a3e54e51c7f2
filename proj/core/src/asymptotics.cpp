#include "polyexp/asymptotics.hpp"

#include <algorithm>
#include <cmath>

namespace polyexp {

double IntervalSet::sup() const {
    if (intervals.empty()) throw OutOfRange("empty interval set has no sup");
    return intervals.back().second;
}

namespace {

double polygon_slack(const std::vector<std::pair<double, double>>& ce, double x) {
    double sum = 0, mx = 0;
    for (auto [c, e] : ce) {
        double r = std::abs(c) * std::exp(e * x);
        sum += r;
        mx = std::max(mx, r);
    }
    return sum - 2 * mx;  // ≥ 0 iff the moduli close a (possibly degenerate) polygon
}

}  // namespace

IntervalSet limit_set_raw(const std::vector<std::pair<double, double>>& coeff_exp,
                          double window_lo, double window_hi) {
    IntervalSet out;
    if (coeff_exp.size() == 2) {
        // m = 1 degenerates to the single balance point r₀ = r₁.
        auto [c0, e0] = coeff_exp[0];
        auto [c1, e1] = coeff_exp[1];
        if (e1 == e0) return out;
        double x = std::log(std::abs(c0 / c1)) / (e1 - e0);
        if (x >= window_lo && x <= window_hi) out.intervals.push_back({x, x});
        return out;
    }

    const int n = 4096;
    auto F = [&](double x) { return polygon_slack(coeff_exp, x); };
    auto refine = [&](double lo, double hi) {  // sign change bracketed: F(lo)·F(hi) < 0
        for (int it = 0; it < 80; ++it) {
            double mid = 0.5 * (lo + hi);
            if ((F(lo) >= 0) == (F(mid) >= 0))
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    };

    double prev_x = window_lo, prev_f = F(window_lo);
    double open = prev_f >= 0 ? window_lo : std::numeric_limits<double>::quiet_NaN();
    for (int i = 1; i <= n; ++i) {
        double x = window_lo + (window_hi - window_lo) * i / n;
        double f = F(x);
        if (prev_f < 0 && f >= 0) open = refine(prev_x, x);
        if (prev_f >= 0 && f < 0) {
            out.intervals.push_back({open, refine(prev_x, x)});
            open = std::numeric_limits<double>::quiet_NaN();
        }
        prev_x = x;
        prev_f = f;
    }
    if (!std::isnan(open)) out.intervals.push_back({open, window_hi});
    return out;
}

IntervalSet limit_set(const PolyExponential& q, const ParamPoint& p, double window_lo,
                      double window_hi) {
    for (size_t i = 0; i < p.size(); ++i)
        if (!(p.value(i) > 0)) throw NotInCone("limit_set requires strictly positive p");
    std::vector<std::pair<double, double>> ce;
    ce.push_back({to_double(q.a0()), 0.0});
    for (const auto& t : q.terms()) {
        double e =
            t.exponent.evaluate([&](const std::string& n) -> double { return p.value_of(n); });
        ce.push_back({to_double(t.coeff), e});
    }
    return limit_set_raw(ce, window_lo, window_hi);
}

namespace {

// Zeros of a truncated equation, classified against the imaginary axis.
void half_plane_zeros(const std::vector<std::pair<double, double>>& terms, double T,
                      double axis_tol, const ZeroFinderOpts& zopts, bool negate,
                      BoundaryZero::Side side, BoundarySpectrum& out) {
    std::vector<ConcreteTerm> cts;
    for (auto [c, e] : terms) {
        ConcreteTerm t;
        t.coeff = c;
        t.coeff_exact = rational_from_double(c);
        t.exponent = e;
        if (e == 0) t.exp_exact = Rational(0);
        cts.push_back(t);
    }
    ConcretePolyExp qc{std::move(cts)};
    if (qc.terms().size() < 2)
        throw DegenerateTruncation("truncation removed all non-constant terms");
    auto [cm, cp] = strip_bounds(qc);
    double margin = 0.02 * (1 + cp - cm);
    Rectangle r{cm - margin, cp + margin, -T, T};
    for (const auto& z : zeros_in_rect(qc, r, zopts)) {
        double re = z.w.real();
        if (re < -axis_tol)
            (negate ? out.right : out.left)
                .push_back({negate ? -z.w : z.w, z.multiplicity, side});
        else if (re <= axis_tol)
            out.axis_ambiguous.push_back({negate ? -z.w : z.w, z.multiplicity,
                                          BoundaryZero::Side::AxisAmbiguous});
        // Re > axis_tol: not part of ℤ₋; dropped.
    }
}

}  // namespace

BoundarySpectrum boundary_spectrum(const std::vector<double>& coeffs, const ExtendedParam& p,
                                   const ExtendedParam& q, double T, double axis_tol,
                                   const ZeroFinderOpts& zopts) {
    size_t m = coeffs.size() - 1;
    if (p.size() != m || q.size() != m)
        throw OutOfRange("boundary_spectrum: p and q must have m entries");
    BoundarySpectrum out;
    out.band = T;

    // Left: Q truncated at p. p[i-1] pairs with aᵢ, i = 1..m.
    std::vector<std::pair<double, double>> left{{coeffs[0], 0.0}};
    for (size_t i = 1; i <= m; ++i)
        if (p.is_finite(i - 1)) left.push_back({coeffs[i], p.entries[i - 1]});
    half_plane_zeros(left, T, axis_tol, zopts, false, BoundaryZero::Side::Left, out);

    // Right: Q̄ truncated at q, then negated. q[0] pairs with a₀'s bar term
    // (exponent ℓ_m), q[i] with aᵢ (exponent ℓ_m − ℓᵢ), a_m is the constant.
    std::vector<std::pair<double, double>> right{{coeffs[m], 0.0}};
    for (size_t i = 0; i < m; ++i)
        if (q.is_finite(i)) right.push_back({coeffs[i], q.entries[i]});
    half_plane_zeros(right, T, axis_tol, zopts, true, BoundaryZero::Side::Right, out);
    return out;
}

GrowthClassification growth_rate(const std::vector<GrowthSample>& samples,
                                 const BoundarySpectrum& boundary, const GrowthOpts& opts) {
    if (samples.size() < 4) throw Inconclusive("too few samples for a growth fit");
    // Use the last decade: samples with min_lbar within 10x of the smallest.
    double mmin = 1e300;
    for (const auto& s : samples) mmin = std::min(mmin, s.min_lbar);
    std::vector<const GrowthSample*> tail;
    for (const auto& s : samples)
        if (s.min_lbar <= 10 * mmin) tail.push_back(&s);
    if (tail.size() < 3) throw Inconclusive("too few samples in the final decade");

    auto stable = [&](auto value) -> std::pair<bool, double> {
        double lo = 1e300, hi = -1e300, sum = 0;
        for (const auto* s : tail) {
            double v = value(*s);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
        double mean = sum / tail.size();
        bool ok = std::abs(mean) > 0 && (hi - lo) <= opts.stability_rel * std::abs(mean);
        return {ok, mean};
    };

    auto [right_ok, right_lambda] =
        stable([](const GrowthSample& s) { return s.w.real() * s.min_lbar; });
    auto [left_ok, left_lambda] =
        stable([](const GrowthSample& s) { return -s.w.real() * s.min_l; });
    auto [re_ok, re_mean] = stable([](const GrowthSample& s) { return s.w.real(); });

    GrowthClassification g{};
    // Alternative §4.2-style fit: the γ implied by |exp(ψ)| ≈ 1/(min(ℓ̄)·γ).
    {
        double sum = 0;
        for (const auto* s : tail) sum += 1.0 / (s->min_lbar * std::exp(s->w.real()));
        g.alt_fit = sum / tail.size();
    }

    auto match = [&](double lambda, bool left_side) {
        double best = std::numeric_limits<double>::quiet_NaN();
        Complex bz{std::numeric_limits<double>::quiet_NaN(), 0};
        for (const auto& z : (left_side ? boundary.left : boundary.right)) {
            double target = left_side ? -z.w.real() : z.w.real();
            double err = std::abs(lambda - target);
            if (std::isnan(best) || err < best) {
                best = err;
                bz = z.w;
            }
        }
        g.matched_boundary_zero = bz;
        g.match_error = best;
    };

    if (right_ok && right_lambda > 0) {
        g.kind = GrowthClassification::Kind::RightRate;
        g.lambda = right_lambda;
        match(right_lambda, false);
        return g;
    }
    if (left_ok && left_lambda > 0) {
        g.kind = GrowthClassification::Kind::LeftRate;
        g.lambda = left_lambda;
        match(left_lambda, true);
        return g;
    }
    if (re_ok || std::abs(re_mean) < opts.bounded_cap) {
        bool diverging = false;
        for (const auto* s : tail)
            if (std::abs(s->w.real()) > opts.bounded_cap) diverging = true;
        if (!diverging) {
            g.kind = GrowthClassification::Kind::Bounded;
            g.lambda = 0;
            return g;
        }
    }
    throw Inconclusive("neither rate fit stabilized and |Re| not bounded");
}

double perron_frontier(const std::vector<double>& ell) {
    if (ell.empty()) throw NoFrontier("empty exponent vector");
    // Normalized by e^{ell0 x} so the evaluation cannot overflow to inf - inf:
    // g(x) = 1 - e^{-ell0 x} - sum e^{(elli - ell0) x}, same sign as the raw form.
    auto g = [&](double x) {
        double v = 1.0 - std::exp(-ell[0] * x);
        for (size_t i = 1; i < ell.size(); ++i) v -= std::exp((ell[i] - ell[0]) * x);
        return v;
    };
    auto dg = [&](double x) {
        double v = ell[0] * std::exp(-ell[0] * x);
        for (size_t i = 1; i < ell.size(); ++i)
            v -= (ell[i] - ell[0]) * std::exp((ell[i] - ell[0]) * x);
        return v;
    };
    double hi = 1;
    while (g(hi) <= 0 && hi < 1e4) hi *= 2;
    if (g(hi) <= 0) throw NoFrontier("dominant term never overtakes the rest");
    // Largest crossing: walk a fine grid down from hi for the last nonpositive point.
    const int n = 20000;
    double lo = std::numeric_limits<double>::quiet_NaN();
    for (int i = n; i >= 0; --i) {
        double x = hi * i / n;
        if (g(x) <= 0) {
            lo = x;
            break;
        }
    }
    if (std::isnan(lo)) throw NoFrontier("defining set empty in the strip");
    double a = lo, b = std::min(hi, lo + hi / n);
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (a + b);
        if (g(mid) <= 0)
            a = mid;
        else
            b = mid;
    }
    double w = 0.5 * (a + b);
    for (int it = 0; it < 50; ++it) {  // Newton polish to the 1e-12 contract
        double f = g(w), d = dg(w);
        if (d == 0) break;
        double step = f / d;
        w -= step;
        if (std::abs(step) < 1e-15 * (1 + std::abs(w))) break;
    }
    return w;
}

}  // namespace polyexp
