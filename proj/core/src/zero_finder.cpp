#include "polyexp/zero_finder.hpp"

#include <algorithm>
#include <cmath>

namespace polyexp {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Magnitude scale Σ|aᵢ||e^{ℓᵢw}| for relative smallness tests.
double qscale(const ConcretePolyExp& qc, Complex w) {
    double s = 0;
    for (const auto& t : qc.terms()) s += std::abs(t.coeff) * std::exp(t.exponent * w.real());
    return s > 0 ? s : 1.0;
}

struct BoundaryHit {};  // internal signal, converted to ZeroOnBoundary at the API edge

// Accumulated argument change of Q along segment a→b. A straight |Δarg| < π/2
// acceptance can silently lose full turns (a true change near 2π wraps into
// (−π/2, π/2)), so every step is validated against its midpoint halves and
// bisected until the halves are both small and consistent with the whole.
double arg_change(const ConcretePolyExp& qc, Complex a, Complex b, Complex fa, Complex fb,
                  double boundary_tol, int depth) {
    double d = std::arg(fb / fa);
    if (depth <= 0) return d;
    Complex m = 0.5 * (a + b);
    Complex fm = qc.eval(m);
    if (std::abs(fm) < boundary_tol * qscale(qc, m)) throw BoundaryHit{};
    double d1 = std::arg(fm / fa), d2 = std::arg(fb / fm);
    if (std::abs(d1) < M_PI / 2 && std::abs(d2) < M_PI / 2 && std::abs(d1 + d2 - d) < 1e-9)
        return d;
    return arg_change(qc, a, m, fa, fm, boundary_tol, depth - 1) +
           arg_change(qc, m, b, fm, fb, boundary_tol, depth - 1);
}

// Pieces per unit length so the dominant-term phase rate ℓ_max cannot rotate
// a single pre-split step by more than ~0.4 rad.
int presplit_pieces(const ConcretePolyExp& qc, double len, int floor_pieces) {
    double lmax = qc.terms().back().exponent;
    int n = static_cast<int>(std::ceil(len * lmax / 0.4));
    return std::max(floor_pieces, n);
}

int winding(const ConcretePolyExp& qc, const Rectangle& r, double boundary_tol) {
    Complex c[5] = {Complex(r.x0, r.y0), Complex(r.x1, r.y0), Complex(r.x1, r.y1),
                    Complex(r.x0, r.y1), Complex(r.x0, r.y0)};
    Complex f[5];
    for (int i = 0; i < 5; ++i) {
        f[i] = qc.eval(c[i]);
        if (std::abs(f[i]) < boundary_tol * qscale(qc, c[i])) throw BoundaryHit{};
    }
    double total = 0;
    for (int i = 0; i < 4; ++i) {
        int pieces = presplit_pieces(qc, std::abs(c[i + 1] - c[i]), 8);
        Complex prev = c[i];
        Complex fprev = f[i];
        for (int k = 1; k <= pieces; ++k) {
            Complex pt = c[i] + (c[i + 1] - c[i]) * (static_cast<double>(k) / pieces);
            Complex fpt = (k == pieces) ? f[i + 1] : qc.eval(pt);
            if (k != pieces && std::abs(fpt) < boundary_tol * qscale(qc, pt)) throw BoundaryHit{};
            total += arg_change(qc, prev, pt, fprev, fpt, boundary_tol, 36);
            prev = pt;
            fprev = fpt;
        }
    }
    double n = total / (2 * M_PI);
    return static_cast<int>(std::lround(n));
}

// Newton iteration at fixed Q; returns true on convergence to residual tol.
bool newton(const ConcretePolyExp& qc, Complex& w, double residual_tol, int mult = 1) {
    // Keep polishing past the residual test: near a multiple zero the residual
    // tolerance is reached long before the iterate stops moving.
    bool ok = false;
    for (int it = 0; it < 80; ++it) {
        Complex q = qc.eval(w);
        if (std::abs(q) < residual_tol * qscale(qc, w)) ok = true;
        Complex dq = qc.eval(w, 1);
        if (dq == Complex(0)) break;
        Complex step = static_cast<double>(mult) * q / dq;
        w -= step;
        if (std::abs(step) < 1e-15 * (1 + std::abs(w))) break;
    }
    return ok || std::abs(qc.eval(w)) < residual_tol * qscale(qc, w);
}

int circle_winding(const ConcretePolyExp& qc, Complex center, double radius, double boundary_tol) {
    int n = presplit_pieces(qc, 2 * M_PI * radius, 64);
    double total = 0;
    Complex prev = center + radius, fprev = qc.eval(prev);
    if (std::abs(fprev) < boundary_tol * qscale(qc, prev)) throw BoundaryHit{};
    for (int k = 1; k <= n; ++k) {
        double th = 2 * M_PI * k / n;
        Complex pt = center + radius * Complex(std::cos(th), std::sin(th));
        Complex fpt = qc.eval(pt);
        if (k != n && std::abs(fpt) < boundary_tol * qscale(qc, pt)) throw BoundaryHit{};
        total += arg_change(qc, prev, pt, fprev, fpt, boundary_tol, 24);
        prev = pt;
        fprev = fpt;
    }
    return static_cast<int>(std::lround(total / (2 * M_PI)));
}

int certify_multiplicity(const ConcretePolyExp& qc, Complex w, const ZeroFinderOpts& opts,
                         int fallback) {
    for (int k = 0; k < opts.perturb_retries; ++k) {
        double radius = opts.cluster_tol * (1.0 + std::fmod(kGolden * (k + 1), 1.0));
        try {
            return circle_winding(qc, w, radius, opts.boundary_tol);
        } catch (BoundaryHit&) {
        }
    }
    return fallback;
}

void subdivide(const ConcretePolyExp& qc, const Rectangle& rect, int count,
               const ZeroFinderOpts& opts, int depth, std::vector<LocatedZero>& out) {
    if (count <= 0) return;

    // Attempt a direct Newton capture from the center.
    Complex w(0.5 * (rect.x0 + rect.x1), 0.5 * (rect.y0 + rect.y1));
    double diam = std::hypot(rect.width(), rect.height());
    if (count == 1 || diam < opts.cluster_tol || depth >= opts.max_depth) {
        Complex w0 = w;
        bool ok = newton(qc, w, opts.residual_tol, count);
        if (!ok && count > 1) {
            w = w0;
            ok = newton(qc, w, opts.residual_tol, 1);
        }
        if (ok && rect.contains(w)) {
            int mult = certify_multiplicity(qc, w, opts, count);
            if (mult == count) {
                out.push_back({w, mult, std::abs(qc.eval(w))});
                return;
            }
            if (mult >= 1 && mult < count && depth < opts.max_depth) {
                // More than one cluster in the box; fall through and split.
            } else if (depth >= opts.max_depth) {
                out.push_back({w, count, std::abs(qc.eval(w))});
                return;
            }
        } else if (depth >= opts.max_depth) {
            out.push_back({w, count, std::abs(qc.eval(w))});  // best effort at depth limit
            return;
        }
        if (diam < opts.cluster_tol * 0.25) {
            // Box is already far below cluster resolution; report as one cluster.
            out.push_back({w0, count, std::abs(qc.eval(w0))});
            return;
        }
    }

    // Quadrisect with golden-offset split lines avoiding boundary zeros.
    for (int k = 0; k < opts.perturb_retries; ++k) {
        double fx = 0.5 + (k == 0 ? 0.0 : (std::fmod(kGolden * k, 1.0) - 0.5) * 0.5);
        double fy = 0.5 + (k == 0 ? 0.0 : (std::fmod(kGolden * kGolden * k, 1.0) - 0.5) * 0.5);
        double sx = rect.x0 + fx * rect.width();
        double sy = rect.y0 + fy * rect.height();
        Rectangle quads[4] = {{rect.x0, sx, rect.y0, sy},
                              {sx, rect.x1, rect.y0, sy},
                              {rect.x0, sx, sy, rect.y1},
                              {sx, rect.x1, sy, rect.y1}};
        try {
            int counts[4], total = 0;
            for (int i = 0; i < 4; ++i) {
                counts[i] = winding(qc, quads[i], opts.boundary_tol);
                total += counts[i];
            }
            if (total != count) continue;  // aliasing safeguard; try another split
            for (int i = 0; i < 4; ++i) subdivide(qc, quads[i], counts[i], opts, depth + 1, out);
            return;
        } catch (BoundaryHit&) {
            continue;
        }
    }
    // Perturbation budget exhausted: a zero insists on sitting on every split.
    throw ZeroOnBoundary("could not find a zero-free subdivision line after retries");
}

}  // namespace

std::pair<double, double> strip_bounds(const ConcretePolyExp& qc) {
    const auto& ts = qc.terms();
    if (ts.size() < 2) throw TiedLeadingExponent("no non-constant term");
    if (!qc.has_unique_max())
        throw TiedLeadingExponent("largest exponent tied or merged to zero");
    size_t m = ts.size() - 1;  // number of non-constant terms
    double am = std::abs(ts.back().coeff);
    double a0 = std::abs(ts.front().coeff);
    double gap = ts.back().exponent - ts[ts.size() - 2].exponent;
    double lmin = ts[1].exponent;
    double M = 0, Mp = 0;
    for (size_t i = 0; i + 1 < ts.size(); ++i) M = std::max(M, std::abs(ts[i].coeff));
    for (size_t i = 1; i < ts.size(); ++i) Mp = std::max(Mp, std::abs(ts[i].coeff));
    double cplus = std::max(0.0, std::log(m * M / am) / gap);
    double cminus = std::min(0.0, std::log(a0 / (m * Mp)) / lmin);
    return {cminus, cplus};
}

int count_zeros(const ConcretePolyExp& qc, const Rectangle& rect, const ZeroFinderOpts& opts) {
    try {
        return winding(qc, rect, opts.boundary_tol);
    } catch (BoundaryHit&) {
        throw ZeroOnBoundary("|Q| below boundary tolerance on the rectangle boundary");
    }
}

std::vector<LocatedZero> zeros_in_rect(const ConcretePolyExp& qc, Rectangle rect,
                                       const ZeroFinderOpts& opts) {
    std::vector<LocatedZero> out;
    double hx = rect.width(), hy = rect.height();
    for (int k = 0; k <= opts.perturb_retries; ++k) {
        Rectangle r = rect;
        if (k > 0) {
            double e = std::fmod(kGolden * k, 1.0) * 1e-3;
            r = {rect.x0 - e * hx, rect.x1 + e * hx, rect.y0 - e * hy, rect.y1 + e * hy};
        }
        try {
            out.clear();
            int n = winding(qc, r, opts.boundary_tol);
            subdivide(qc, r, n, opts, 0, out);
            // Merge clusters below resolution: floating-point evaluation can
            // split a genuine multiple zero into nearby simple ones.
            std::vector<LocatedZero> merged;
            std::vector<bool> used(out.size(), false);
            for (size_t a = 0; a < out.size(); ++a) {
                if (used[a]) continue;
                LocatedZero z = out[a];
                Complex sum = z.w * static_cast<double>(z.multiplicity);
                for (size_t b = a + 1; b < out.size(); ++b) {
                    if (used[b] || std::abs(out[b].w - out[a].w) > opts.cluster_tol) continue;
                    used[b] = true;
                    z.multiplicity += out[b].multiplicity;
                    z.residual = std::max(z.residual, out[b].residual);
                    sum += out[b].w * static_cast<double>(out[b].multiplicity);
                }
                z.w = sum / static_cast<double>(z.multiplicity);
                merged.push_back(z);
            }
            out = std::move(merged);
            // Re-then-Im order; real parts within the cluster tolerance count
            // as ties so numeric jitter cannot reorder a vertical zero stack.
            std::sort(out.begin(), out.end(),
                      [&](const LocatedZero& a, const LocatedZero& b) {
                          if (std::abs(a.w.real() - b.w.real()) > opts.cluster_tol)
                              return a.w.real() < b.w.real();
                          return a.w.imag() < b.w.imag();
                      });
            return out;
        } catch (BoundaryHit&) {
            continue;
        } catch (ZeroOnBoundary&) {
            if (k == opts.perturb_retries) throw;
        }
    }
    throw ZeroOnBoundary("outer rectangle perturbation retries exhausted");
}

std::vector<LocatedZero> zeros_in_band(const ConcretePolyExp& qc, double T,
                                       const ZeroFinderOpts& opts) {
    auto [cm, cp] = strip_bounds(qc);
    double margin = 0.01 * (1 + cp - cm);
    // Half-open band [0, T): search a slightly taller window so zeros exactly
    // on Im = 0 or Im = T stay clear of the contour, then keep [0, T) only.
    double delta = std::min(0.25, 0.05 * T);
    Rectangle r{cm - margin, cp + margin, -delta, T + delta};
    std::vector<LocatedZero> all = zeros_in_rect(qc, r, opts);
    std::vector<LocatedZero> out;
    double snap = 1e-9 * (1 + T);
    for (const auto& z : all)
        if (z.w.imag() >= -snap && z.w.imag() < T - snap) out.push_back(z);
    return out;
}

}  // namespace polyexp
