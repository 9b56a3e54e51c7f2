#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "polyexp/fixtures.hpp"
#include "polyexp/rational_oracle.hpp"

using namespace polyexp;

TEST_CASE("specialization scales exponents to coprime integers") {
    PolyExponential q = fixtures::example1_poly();
    SparsePolynomial p = specialize(q, fixtures::example1_ell());
    // exponents (2,4) scale by r = 1/2 to (1,2): 1 - 11 z + z^2
    CHECK(p.scale == Rational(1, 2));
    CHECK(p.dense().str() == "t^2 - 11*t + 1");

    SparsePolynomial pp = specialize(q, fixtures::example1_ell_prime());
    // exponents (6,9,12) scale by 1/3: 1 - 2 z^2 - 9 z^3 + z^4
    CHECK(pp.scale == Rational(1, 3));
    CHECK(pp.dense().str() == "t^4 - 9*t^3 - 2*t^2 + 1");
}

TEST_CASE("specialization handles fractional exponents") {
    PolyExponential q(Rational(1), {"a"},
                      {{Rational(2), LinearForm::variable("a", Rational(1, 2))},
                       {Rational(3), LinearForm::variable("a")}});
    SparsePolynomial p =
        specialize(q, ParamPoint({"a"}, std::vector<Rational>{Rational(3, 5)}));
    // exponents (3/10, 3/5): r = 10/3 makes them (1,2)
    CHECK(p.scale == Rational(10, 3));
    CHECK(p.dense().str() == "3*t^2 + 2*t + 1");
}

TEST_CASE("spectrum classes of example1 at ell") {
    PolyExponential q = fixtures::example1_poly();
    std::vector<SpectrumClass> cs = spectrum_classes(q, fixtures::example1_ell());
    REQUIRE(cs.size() == 2);
    double big = std::log((11 + std::sqrt(117.0)) / 2) / 2;
    CHECK(cs.front().w.real() == doctest::Approx(-big).epsilon(1e-10));
    CHECK(cs.back().w.real() == doctest::Approx(big).epsilon(1e-10));
    for (const auto& c : cs) {
        CHECK(c.multiplicity == 1);
        CHECK(c.residual < 1e-10);
        CHECK(c.w.imag() >= 0);
        CHECK(c.w.imag() < 2 * std::numbers::pi * to_double(c.scale));
    }
}

TEST_CASE("spectrum moduli of example1 at ell-prime match the displayed values") {
    PolyExponential q = fixtures::example1_poly();
    std::vector<SpectrumClass> cs = spectrum_classes(q, fixtures::example1_ell_prime());
    // |z| = |t|^3 for z = e^{3w}
    std::vector<double> mods;
    for (const auto& c : cs) mods.push_back(std::abs(c.t));
    std::sort(mods.begin(), mods.end());
    CHECK(mods.front() == doctest::Approx(0.421).epsilon(5e-3));
    CHECK(mods.back() == doctest::Approx(9.215).epsilon(5e-3));
}

TEST_CASE("multiplicities come from exact squarefree structure") {
    // (1 - e^w)^2 = 1 - 2 e^w + e^{2w}
    PolyExponential q(Rational(1), {"a"},
                      {{Rational(-2), LinearForm::variable("a")},
                       {Rational(1), LinearForm::variable("a", Rational(2))}});
    std::vector<SpectrumClass> cs =
        spectrum_classes(q, ParamPoint({"a"}, std::vector<Rational>{Rational(1)}));
    REQUIRE(cs.size() == 1);
    CHECK(cs[0].multiplicity == 2);
    CHECK(std::abs(cs[0].w) < 1e-12);
}

TEST_CASE("rho and lambda are one-based order statistics") {
    OrderedSpectrum os(std::vector<double>{-1.5, 0.25, 2.0});
    CHECK(os.rho(1) == 2.0);
    CHECK(os.rho(3) == -1.5);
    CHECK(os.lambda(1) == -1.5);
    CHECK(os.lambda(2) == 0.25);
    CHECK_THROWS_AS(os.rho(4), OutOfRange);
    CHECK_THROWS_AS(os.lambda(0), OutOfRange);
}

TEST_CASE("spectrum homogeneity under exponent scaling") {
    PolyExponential q = fixtures::example1_poly();
    ParamPoint ell = fixtures::example1_ell();
    Rational r(3, 2);
    std::vector<SpectrumClass> a = spectrum_classes(q, ell);
    std::vector<SpectrumClass> b = spectrum_classes(q, ell.scaled(r));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(b[i].w.real() == doctest::Approx(a[i].w.real() / to_double(r)).epsilon(1e-9));
        CHECK(b[i].multiplicity == a[i].multiplicity);
    }
}

TEST_CASE("congruence of zeros modulo the exponent lattice") {
    PolyExponential q = fixtures::example1_poly();
    ParamPoint ell = fixtures::example1_ell();
    std::vector<SpectrumClass> cs = spectrum_classes(q, ell);
    Complex w = cs.back().w;
    // the instantiated exponent tuple of Q at ell is (2,4): period 2*pi*r = pi
    ParamPoint exps = ParamPoint::ell(std::vector<Rational>{2, 4});
    CHECK(congruent(w, w + Complex(0, std::numbers::pi), exps, 1e-9));
    CHECK(congruent(w, w + Complex(0, 5 * std::numbers::pi), exps, 1e-9));
    CHECK_FALSE(congruent(w, w + Complex(0, 0.5), exps, 1e-9));
    CHECK_FALSE(congruent(w, w + Complex(0.3, 0), exps, 1e-9));
    CHECK_FALSE(congruent(w, cs.front().w, exps, 1e-9));
}
