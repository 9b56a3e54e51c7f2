#include <cmath>

#include "doctest.h"
#include "polyexp/continuation.hpp"
#include "polyexp/fixtures.hpp"
#include "polyexp/rational_oracle.hpp"

using namespace polyexp;

TEST_CASE("paths interpolate breakpoints equidistantly") {
    ParamPath p = fixtures::example1_vpath();
    CHECK(p.at(0.0).value(0) == doctest::Approx(1.0));
    CHECK(p.at(1.0).value(7) == doctest::Approx(6.0));
    CHECK(p.at(0.5).value(0) == doctest::Approx(2.5));
    CHECK(p.at(0.5).value(3) == doctest::Approx(3.0));
    std::vector<double> d = p.direction(0.25);
    CHECK(d[0] == doctest::Approx(3.0));
    CHECK(d[6] == doctest::Approx(4.0));
}

TEST_CASE("tracking a single zero along the example1 V path") {
    PolyExponential q = fixtures::example1_poly();
    std::vector<SpectrumClass> start = spectrum_classes(q, fixtures::example1_ell());
    Trajectory tr = track(q, fixtures::example1_vpath(), start.back().w);
    REQUIRE(tr.status == TrajectoryStatus::Completed);
    // endpoint: the dominant class at ell', Re = ln(9.2146...)/3
    std::vector<SpectrumClass> end = spectrum_classes(q, fixtures::example1_ell_prime());
    CHECK(tr.end().real() == doctest::Approx(end.back().w.real()).epsilon(1e-8));
    for (const auto& s : tr.samples) CHECK(s.residual < 1e-8);
}

TEST_CASE("track_all continues every band zero") {
    PolyExponential q = fixtures::example1_poly();
    std::vector<Trajectory> trs = track_all(q, fixtures::example1_vpath(), 3.2);
    REQUIRE(trs.size() == 4);
    for (const auto& tr : trs) {
        CHECK(tr.status == TrajectoryStatus::Completed);
        for (const auto& s : tr.samples) CHECK(std::abs(s.w.real()) > 1e-6);
    }
}

TEST_CASE("a path that leaves the cone is rejected") {
    PolyExponential q(Rational(-1), {"l1", "l2"},
                      {{Rational(1), LinearForm::variable("l1")},
                       {Rational(1), LinearForm::variable("l2")}});
    // midpoint (1.5, 1.5) ties the leading exponent
    ParamPath path({ParamPoint::ell(std::vector<Rational>{1, 2}),
                    ParamPoint::ell(std::vector<Rational>{2, 1})});
    std::vector<SpectrumClass> start =
        spectrum_classes(q, ParamPoint::ell(std::vector<Rational>{1, 2}));
    CHECK_THROWS_AS(track(q, path, start.back().w), PathLeftCone);
}

TEST_CASE("colliding zeros are flagged with a cluster") {
    // Q = 1 - 2 e^{l1 w} + e^{l2 w}: at (1,2) it is (1 - e^w)^2 with a double
    // zero at w = 0, where the tracked simple zero collides with the fixed one.
    PolyExponential q(Rational(1), {"l1", "l2"},
                      {{Rational(-2), LinearForm::variable("l1")},
                       {Rational(1), LinearForm::variable("l2")}});
    ParamPath path({ParamPoint::ell(std::vector<Rational>{Rational(4, 5), 2}),
                    ParamPoint::ell(std::vector<Rational>{Rational(6, 5), 2})});
    // the negative real zero of 1 - 2 e^{0.8 w} + e^{2 w}, which crosses w = 0
    ConcretePolyExp qc = q.instantiate(path.at(0.0));
    std::vector<LocatedZero> zs = zeros_in_rect(qc, {-0.6, -1e-3, -0.3, 0.3});
    REQUIRE(zs.size() == 1);
    TrackOpts opts;
    opts.check_cone = false;
    Trajectory tr = track(q, path, zs[0].w, opts);
    CHECK(tr.status == TrajectoryStatus::CollisionFlagged);
    CHECK(!tr.collision_cluster.empty());
    int mult = 0;
    for (const auto& z : tr.collision_cluster) mult += z.multiplicity;
    CHECK(mult >= 2);
}
