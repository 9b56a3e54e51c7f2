#include "doctest.h"
#include "polyexp/fixtures.hpp"
#include "polyexp/json_io.hpp"
#include "polyexp/rational_oracle.hpp"

using namespace polyexp;

TEST_CASE("poly-exponential JSON round trip") {
    PolyExponential q = fixtures::example2_poly();
    PolyExponential r = poly_from_json(poly_to_json(q));
    CHECK(r.a0() == q.a0());
    REQUIRE(r.terms().size() == q.terms().size());
    for (const auto& t : q.terms()) {
        bool found = false;
        for (const auto& u : r.terms())
            if (u.exponent == t.exponent && u.coeff == t.coeff) found = true;
        CHECK(found);
    }
}

TEST_CASE("rationals survive serialization as p/q strings") {
    PolyExponential q(Rational(-2, 3), {"a"},
                      {{Rational(7, 5), LinearForm::variable("a", Rational(26, 23))}});
    PolyExponential r = poly_from_json(poly_to_json(q));
    CHECK(r.a0() == Rational(-2, 3));
    CHECK(r.terms()[0].coeff == Rational(7, 5));
    CHECK(r.terms()[0].exponent.coeff("a") == Rational(26, 23));
}

TEST_CASE("graph JSON accepts vertex names and parametric lengths") {
    GraphInput gi = graph_from_json(fixtures::fixture_json("example1-graph"));
    CHECK(gi.graph.vertices.size() == 2);
    CHECK(gi.graph.edges.size() == 8);
    CHECK_FALSE(gi.all_integer);
    CHECK(gi.graph.edges[6].src == gi.graph.edges[6].dst);  // the loop e7

    GraphInput gj = graph_from_json(
        R"({"vertices":["x"],"edges":[{"id":"e","src":"x","dst":"x","len":3}]})");
    CHECK(gj.all_integer);
    CHECK(gj.int_lens == std::vector<long long>{3});
}

TEST_CASE("path JSON parses exact breakpoints") {
    PathInput pi = path_from_json(fixtures::fixture_json("example1-vpath"));
    CHECK(pi.path.breakpoints().size() == 2);
    CHECK(pi.path.breakpoints()[0].is_exact());
    CHECK(pi.path.at(1.0).value(7) == doctest::Approx(6.0));
}

TEST_CASE("extended params accept inf entries") {
    ExtendedParam p = extended_param_parse("1,26/23,inf");
    REQUIRE(p.size() == 3);
    CHECK(p.entries[0] == 1.0);
    CHECK(p.entries[1] == doctest::Approx(26.0 / 23));
    CHECK_FALSE(p.is_finite(2));
}

TEST_CASE("param point parsing keeps exact values") {
    ParamPoint pt = param_point_parse("1,1,1,1,1,1,2,2");
    CHECK(pt.is_exact());
    CHECK(pt.exact_value(7) == Rational(2));
    CHECK(pt.names()[0] == "l1");
}

TEST_CASE("csv output is fixed format and deterministic") {
    PolyExponential q = fixtures::example1_poly();
    std::vector<SpectrumClass> cs = spectrum_classes(q, fixtures::example1_ell());
    std::string a = spectrum_to_csv(cs);
    std::string b = spectrum_to_csv(spectrum_classes(q, fixtures::example1_ell()));
    CHECK(a == b);
    CHECK(a.substr(0, a.find('\n')) == "re,im,multiplicity,residual,class_id");
}

TEST_CASE("automorphism JSON resolves names to indices") {
    GraphInput gi = graph_from_json(
        R"({"vertices":["a","b"],"edges":[
            {"id":"e1","src":"a","dst":"b","len":1},
            {"id":"e2","src":"b","dst":"a","len":1}]})");
    GraphAutomorphism t = automorphism_from_json(
        R"({"vertices":{"a":"b","b":"a"},"edges":{"e1":"e2","e2":"e1"}})", gi.graph);
    CHECK(t.vperm == std::vector<int>{1, 0});
    CHECK(t.eperm == std::vector<int>{1, 0});
}

TEST_CASE("fixture bodies parse back to their builders") {
    PolyExponential q = poly_from_json(fixtures::fixture_json("example2-teichmuller"));
    CHECK(q.terms().size() == fixtures::example2_poly().terms().size());
    PolyExponential f = poly_from_json(fixtures::fixture_json("theorem2-family"));
    CHECK(f.a0() == Rational(-1));
    CHECK(f.terms().size() == 3);
    PolyExponential e3 = poly_from_json(fixtures::fixture_json("example3-quotient"));
    CHECK(e3.terms().size() == 4);
}
