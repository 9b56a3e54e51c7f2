#pragma once

#include <string>
#include <vector>

#include "polyexp/poly_exponential.hpp"
#include "polyexp/zero_finder.hpp"

namespace polyexp {

// Piecewise-linear path in parameter space, s ∈ [0,1], breakpoints equidistant
// in s. Interior points must stay in the instantiation domain of the caller's Q.
class ParamPath {
public:
    explicit ParamPath(std::vector<ParamPoint> breakpoints);

    const std::vector<ParamPoint>& breakpoints() const { return bps_; }
    size_t dim() const { return bps_.front().size(); }
    const std::vector<std::string>& names() const { return bps_.front().names(); }

    ParamPoint at(double s) const;
    std::vector<double> direction(double s) const;  // dℓ/ds (constant per segment)

private:
    std::vector<ParamPoint> bps_;
};

enum class TrajectoryStatus { Completed, ExitedBand, CollisionFlagged };

struct TrajectorySample {
    double s;
    std::vector<double> ell;
    Complex w;
    double residual;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    TrajectoryStatus status = TrajectoryStatus::Completed;
    std::vector<LocatedZero> collision_cluster;  // populated when collision-flagged

    Complex end() const { return samples.back().w; }
};

struct TrackOpts {
    double residual_tol = 1e-9;
    double initial_step = 1e-2;
    double min_step = 1e-8;
    double singular_tol = 1e-10;
    double collision_tol = 1e-2;  // flag when the nearest-zero estimate drops below this
    double trust_radius = 0.5;    // overridden per-start by track_all
    // Band monitoring (used by track_all); NaN disables.
    double band_lo = std::numeric_limits<double>::quiet_NaN();
    double band_hi = std::numeric_limits<double>::quiet_NaN();
    bool check_cone = true;  // verify ℓ(s) ∈ 𝒮 (instantiated exponents) along the way
};

// Davidenko predictor / damped-Newton corrector continuation of one zero.
Trajectory track(const PolyExponential& q, const ParamPath& path, Complex w0,
                 const TrackOpts& opts = {});

// One trajectory per zero of ℤ(ℓ(0)) in the band Im ∈ [0, T).
std::vector<Trajectory> track_all(const PolyExponential& q, const ParamPath& path, double T,
                                  const TrackOpts& opts = {});

}  // namespace polyexp
