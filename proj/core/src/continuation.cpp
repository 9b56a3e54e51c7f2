#include "polyexp/continuation.hpp"

#include <algorithm>
#include <cmath>

namespace polyexp {

ParamPath::ParamPath(std::vector<ParamPoint> breakpoints) : bps_(std::move(breakpoints)) {
    if (bps_.size() < 1) throw OutOfRange("path needs at least one breakpoint");
    for (const auto& b : bps_)
        if (b.size() != bps_.front().size()) throw OutOfRange("path breakpoints differ in dim");
}

ParamPoint ParamPath::at(double s) const {
    if (bps_.size() == 1) return bps_.front();
    s = std::clamp(s, 0.0, 1.0);
    double seg = s * (bps_.size() - 1);
    size_t i = std::min(static_cast<size_t>(seg), bps_.size() - 2);
    double f = seg - i;
    std::vector<double> v(dim());
    for (size_t j = 0; j < dim(); ++j)
        v[j] = (1 - f) * bps_[i].value(j) + f * bps_[i + 1].value(j);
    return ParamPoint(bps_.front().names(), std::move(v));
}

std::vector<double> ParamPath::direction(double s) const {
    std::vector<double> d(dim(), 0.0);
    if (bps_.size() == 1) return d;
    s = std::clamp(s, 0.0, 1.0);
    double seg = s * (bps_.size() - 1);
    size_t i = std::min(static_cast<size_t>(seg), bps_.size() - 2);
    double k = static_cast<double>(bps_.size() - 1);
    for (size_t j = 0; j < dim(); ++j) d[j] = k * (bps_[i + 1].value(j) - bps_[i].value(j));
    return d;
}

namespace {

// ℓ(s) ∈ 𝒮 for the instantiated exponents: all positive, strict unique max.
// Returns the index of the leading term; ties crossing between two check
// points flip this index, which the caller treats as leaving the cone.
size_t check_cone(const PolyExponential& q, const ParamPoint& pt, double s) {
    double mx = -1, mx2 = -1;
    size_t argmax = 0;
    const auto& ts = q.terms();
    for (size_t i = 0; i < ts.size(); ++i) {
        double L = ts[i].exponent.evaluate(
            [&](const std::string& n) -> double { return pt.value_of(n); });
        if (L <= 0)
            throw PathLeftCone("exponent " + std::to_string(L) + " <= 0 at s=" + std::to_string(s));
        if (L > mx) {
            mx2 = mx;
            mx = L;
            argmax = i;
        } else if (L > mx2) {
            mx2 = L;
        }
    }
    if (mx2 >= mx) throw PathLeftCone("leading exponent tied at s=" + std::to_string(s));
    return argmax;
}

// Newton corrector at frozen ℓ; ≤ 5 iterations per the step-acceptance rule.
bool correct(const PolyExponential& q, const ParamPoint& pt, const std::vector<double>& dir,
             Complex& w, double tol, double trust) {
    Complex w_in = w;
    for (int it = 0; it < 5; ++it) {
        auto j = q.eval_dir(pt, dir, w);
        if (std::abs(j.q) < tol * std::max(1.0, j.scale)) return true;
        if (j.dq_dw == Complex(0)) return false;
        Complex step = j.q / j.dq_dw;
        double damp = 1.0;
        if (std::abs(step) > 0.5 * trust) damp = 0.5 * trust / std::abs(step);
        w -= damp * step;
        if (std::abs(w - w_in) > trust) return false;
    }
    auto j = q.eval_dir(pt, dir, w);
    return std::abs(j.q) < tol * std::max(1.0, j.scale);
}

}  // namespace

Trajectory track(const PolyExponential& q, const ParamPath& path, Complex w0,
                 const TrackOpts& opts) {
    Trajectory tr;
    double s = 0;
    Complex w = w0;
    ParamPoint pt = path.at(0);
    std::vector<double> dir = path.direction(0);
    size_t leading = opts.check_cone ? check_cone(q, pt, 0) : 0;
    auto j0 = q.eval_dir(pt, dir, w);
    if (std::abs(j0.q) >= opts.residual_tol * std::max(1.0, j0.scale) * 10)
        throw OutOfRange("track: starting point is not a zero");

    auto push = [&](double sv, const ParamPoint& p, Complex wv, const auto& jj) {
        tr.samples.push_back({sv, p.values(), wv, std::abs(jj.q) / std::max(1.0, jj.scale)});
    };
    push(0, pt, w, j0);

    auto attach_collision = [&](const ParamPoint& p, Complex wc) {
        tr.status = TrajectoryStatus::CollisionFlagged;
        try {
            ConcretePolyExp qc = q.instantiate(p);
            double half = 3 * opts.collision_tol;
            Rectangle r{wc.real() - half, wc.real() + half, wc.imag() - half, wc.imag() + half};
            tr.collision_cluster = zeros_in_rect(qc, r);
        } catch (const Error&) {
            // cluster extraction is best-effort
        }
    };

    double h = opts.initial_step;
    while (s < 1.0) {
        h = std::min(h, 1.0 - s);
        ParamPoint p0 = path.at(s);
        std::vector<double> d0 = path.direction(s + 1e-12);
        auto j = q.eval_dir(p0, d0, w);

        // First-order distance to the nearest other zero: 2|Q'| / |Q''|.
        // Flag a collision when it collapses; refine the step while it shrinks
        // so a genuine collision cannot be stepped over.
        ConcretePolyExp qc0 = q.instantiate(p0);
        double d2 = std::abs(qc0.eval(w, 2));
        double d_est = d2 > 0 ? 2 * std::abs(qc0.eval(w, 1)) / d2 : 1e300;
        if (d_est < opts.collision_tol) {
            attach_collision(p0, w);
            return tr;
        }
        bool ok = false;
        Complex w_new;
        if (std::abs(j.dq_dw) > opts.singular_tol * std::max(1.0, j.scale)) {
            Complex dwds = -j.dq_ds / j.dq_dw;
            if (d_est < 0.5)
                h = std::min(h, std::max(opts.min_step,
                                         0.1 * d_est / std::max(1.0, std::abs(dwds))));
            h = std::min(h, 1.0 - s);
            w_new = w + h * dwds;  // Euler predictor
            ParamPoint p1 = path.at(s + h);
            if (opts.check_cone && check_cone(q, p1, s + h) != leading)
                throw PathLeftCone("leading exponent changes along the path at s=" +
                                   std::to_string(s + h));
            std::vector<double> d1 = path.direction(s + h);
            Complex w_corr = w_new;
            if (correct(q, p1, d1, w_corr, opts.residual_tol, opts.trust_radius) &&
                std::abs(w_corr - w) <= opts.trust_radius) {
                ok = true;
                w_new = w_corr;
            }
        }
        if (!ok) {
            if (h > opts.min_step) {
                h *= 0.5;
                continue;
            }
            // Persistent failure at minimum step: collision policy.
            attach_collision(p0, w);
            return tr;
        }
        s += h;
        w = w_new;
        ParamPoint p1 = path.at(s);
        auto jr = q.eval_dir(p1, path.direction(s), w);
        push(s, p1, w, jr);
        if (!std::isnan(opts.band_lo) &&
            (w.imag() < opts.band_lo || w.imag() > opts.band_hi)) {
            tr.status = TrajectoryStatus::ExitedBand;
            return tr;
        }
        h = std::min(h * 1.6, opts.initial_step * 4);
    }
    tr.status = TrajectoryStatus::Completed;
    return tr;
}

std::vector<Trajectory> track_all(const PolyExponential& q, const ParamPath& path, double T,
                                  const TrackOpts& opts) {
    ConcretePolyExp qc0 = q.instantiate(path.at(0));
    ZeroFinderOpts zopts;
    zopts.residual_tol = std::min(1e-10, opts.residual_tol);
    std::vector<LocatedZero> starts = zeros_in_band(qc0, T, zopts);

    std::vector<Trajectory> out;
    for (size_t i = 0; i < starts.size(); ++i) {
        TrackOpts o = opts;
        double dmin = 1e9;
        for (size_t k = 0; k < starts.size(); ++k)
            if (k != i) dmin = std::min(dmin, std::abs(starts[i].w - starts[k].w));
        o.trust_radius = (starts.size() > 1) ? 0.5 * dmin : opts.trust_radius;
        if (std::isnan(o.band_lo)) {
            o.band_lo = -1.0 - T;
            o.band_hi = T + 1.0;
        }
        out.push_back(track(q, path, starts[i].w, o));
    }
    return out;
}

}  // namespace polyexp
