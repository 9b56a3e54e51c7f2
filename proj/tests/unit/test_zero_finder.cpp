#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polyexp/fixtures.hpp"
#include "polyexp/rational_oracle.hpp"
#include "polyexp/zero_finder.hpp"

using namespace polyexp;

namespace {

ConcretePolyExp example1_concrete() {
    return fixtures::example1_poly().instantiate(fixtures::example1_ell());
}

}  // namespace

TEST_CASE("winding count inside a rectangle") {
    ConcretePolyExp qc = example1_concrete();
    double x = std::log((11 + std::sqrt(117.0)) / 2) / 2;
    CHECK(count_zeros(qc, {x - 0.2, x + 0.2, -0.2, 0.2}) == 1);
    CHECK(count_zeros(qc, {-2, 2, -0.5, 0.5}) == 2);
    CHECK(count_zeros(qc, {-2, 2, 0.5, 2.5}) == 0);
}

TEST_CASE("zeros in a rectangle with certified residuals") {
    ConcretePolyExp qc = example1_concrete();
    double x = std::log((11 + std::sqrt(117.0)) / 2) / 2;
    std::vector<LocatedZero> zs = zeros_in_rect(qc, {-2, 2, -0.5, 0.5});
    REQUIRE(zs.size() == 2);
    CHECK(zs[0].w.real() == doctest::Approx(-x).epsilon(1e-9));
    CHECK(zs[1].w.real() == doctest::Approx(x).epsilon(1e-9));
    for (const auto& z : zs) {
        CHECK(std::abs(z.w.imag()) < 1e-9);
        CHECK(z.multiplicity == 1);
        CHECK(z.residual < 1e-10);
    }
}

TEST_CASE("double zeros get multiplicity two") {
    // (e^w - 2)^2 = 4 - 4 e^w + e^{2w}, zero at w = ln 2
    std::vector<ConcreteTerm> ts(3);
    ts[0].coeff_exact = 4;
    ts[0].exp_exact = Rational(0);
    ts[1].coeff_exact = -4;
    ts[1].exp_exact = Rational(1);
    ts[2].coeff_exact = 1;
    ts[2].exp_exact = Rational(2);
    ConcretePolyExp qc{ts};
    CHECK(count_zeros(qc, {0, 1.5, -1, 1}) == 2);
    std::vector<LocatedZero> zs = zeros_in_rect(qc, {0, 1.5, -1, 1});
    REQUIRE(zs.size() == 1);
    CHECK(zs[0].multiplicity == 2);
    CHECK(zs[0].w.real() == doctest::Approx(std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("band search agrees with the unfolded rational oracle") {
    ConcretePolyExp qc = example1_concrete();
    std::vector<LocatedZero> zs = zeros_in_band(qc, 3.2);
    REQUIRE(zs.size() == 4);
    double x = std::log((11 + std::sqrt(117.0)) / 2) / 2;
    double pi = std::numbers::pi;
    std::vector<Complex> expect = {{-x, 0}, {-x, pi}, {x, 0}, {x, pi}};
    for (size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(zs[i].w - expect[i]) < 1e-9);
        CHECK(zs[i].multiplicity == 1);
    }
}

TEST_CASE("each band window counts a periodicity class exactly once") {
    ConcretePolyExp qc = example1_concrete();
    // period pi: [0, 2*pi) holds each of the two classes twice
    CHECK(zeros_in_band(qc, 2 * std::numbers::pi).size() == 4);
    CHECK(zeros_in_band(qc, std::numbers::pi).size() == 2);
}

TEST_CASE("strip bounds reject a tied leading exponent") {
    // e^{w} + e^{w} ties pre-merge via distinct forms at a tying point
    PolyExponential q(Rational(1), {"a", "b"},
                      {{Rational(1), LinearForm::variable("a")},
                       {Rational(1), LinearForm::variable("b")}});
    ConcretePolyExp qc =
        q.instantiate(ParamPoint({"a", "b"}, std::vector<Rational>{Rational(1), Rational(1)}));
    CHECK_FALSE(qc.has_unique_max());
    CHECK_THROWS_AS(strip_bounds(qc), TiedLeadingExponent);
}
