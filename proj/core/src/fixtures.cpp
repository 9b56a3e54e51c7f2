#include "polyexp/fixtures.hpp"

#include <sstream>

#include "json.hpp"

namespace polyexp::fixtures {

using nlohmann::json;

std::vector<std::string> list() { return {"example1", "example2-teichmuller", "theorem2-family"}; }

namespace {

LinearForm lf(std::initializer_list<std::pair<const char*, long long>> coeffs) {
    LinearForm f;
    for (auto [n, c] : coeffs) f.set_coeff(n, Rational(c));
    return f;
}

}  // namespace

GraphInput example1_graph() {
    GraphInput g;
    g.graph.vertices = {"u", "v"};
    g.graph.edges = {{"e1", 0, 1}, {"e2", 0, 1}, {"e3", 0, 1}, {"e4", 1, 0},
                     {"e5", 1, 0}, {"e6", 1, 0}, {"e7", 0, 0}, {"e8", 1, 1}};
    for (int i = 1; i <= 8; ++i) g.lens.push_back(LinearForm::variable("l" + std::to_string(i)));
    g.all_integer = false;
    return g;
}

PolyExponential example1_poly() {
    std::vector<std::string> params;
    for (int i = 1; i <= 8; ++i) params.push_back("l" + std::to_string(i));
    std::vector<PolyExponential::Term> terms;
    terms.push_back({Rational(1), lf({{"l7", 1}, {"l8", 1}})});
    for (int i = 1; i <= 3; ++i)
        for (int j = 4; j <= 6; ++j)
            terms.push_back({Rational(-1), lf({{("l" + std::to_string(i)).c_str(), 1},
                                               {("l" + std::to_string(j)).c_str(), 1}})});
    terms.push_back({Rational(-1), lf({{"l7", 1}})});
    terms.push_back({Rational(-1), lf({{"l8", 1}})});
    return PolyExponential(Rational(1), std::move(params), std::move(terms));
}

ParamPoint example1_ell() {
    return ParamPoint::ell(std::vector<Rational>{1, 1, 1, 1, 1, 1, 2, 2});
}

ParamPoint example1_ell_prime() {
    return ParamPoint::ell(std::vector<Rational>{4, 4, 4, 5, 5, 5, 6, 6});
}

ParamPath example1_vpath() {
    return ParamPath({example1_ell(), example1_ell_prime()});
}

PolyExponential example2_poly() {
    std::vector<PolyExponential::Term> terms;
    terms.push_back({Rational(1), lf({{"u", 2}, {"a", -1}, {"b", 2}, {"c", 3}})});
    terms.push_back({Rational(1), lf({{"u", 1}, {"a", -1}, {"b", -1}})});
    terms.push_back({Rational(1), lf({{"u", 1}, {"b", 3}, {"c", 3}})});
    terms.push_back({Rational(1), lf({{"u", 1}, {"a", -1}, {"b", 3}, {"c", 4}})});
    terms.push_back({Rational(1), lf({{"u", 1}, {"b", 3}, {"c", 4}})});
    for (long long i = 1; i <= 4; ++i) {
        terms.push_back({Rational(-1), lf({{"u", 1}, {"a", -1}, {"b", i - 1}, {"c", i}})});
        terms.push_back({Rational(-1), lf({{"u", 1}, {"b", i - 1}, {"c", i}})});
        terms.push_back({Rational(-1), lf({{"u", 1}, {"a", -1}, {"b", i - 1}, {"c", i - 1}})});
        terms.push_back({Rational(-1), lf({{"u", 1}, {"b", i - 1}, {"c", i - 1}})});
    }
    return PolyExponential(Rational(1), {"a", "b", "c", "u"}, std::move(terms));
}

ParamPoint example2_gamma(const Rational& x) {
    return ParamPoint({"a", "b", "c", "u"},
                      std::vector<Rational>{Rational(-1) + x, Rational(3) - 4 * x,
                                            Rational(1) - 5 * x, Rational(3)});
}

ParamPath example2_gamma_path(const Rational& x_hi, const Rational& x_lo) {
    return ParamPath({example2_gamma(x_hi), example2_gamma(x_lo)});
}

PolyExponential theorem2_family(size_t m) {
    std::vector<std::string> params;
    std::vector<PolyExponential::Term> terms;
    for (size_t i = 1; i <= m; ++i) {
        params.push_back("l" + std::to_string(i));
        terms.push_back({Rational(1), LinearForm::variable(params.back())});
    }
    return PolyExponential(Rational(-1), std::move(params), std::move(terms));
}

PolyExponential example3_quotient() {
    std::vector<PolyExponential::Term> terms;
    terms.push_back({Rational(-1), LinearForm::variable("l1")});
    terms.push_back({Rational(1), LinearForm::variable("l9")});
    terms.push_back({Rational(1), LinearForm::variable("l11")});
    terms.push_back({Rational(-1), LinearForm::variable("l8")});
    return PolyExponential(Rational(1), {"l1", "l8", "l9", "l11"}, std::move(terms));
}

namespace {

std::string example1_graph_json() {
    json j;
    j["vertices"] = {"u", "v"};
    j["edges"] = json::array();
    GraphInput g = example1_graph();
    for (size_t i = 0; i < g.graph.edges.size(); ++i) {
        const auto& e = g.graph.edges[i];
        json je;
        je["id"] = e.id;
        je["src"] = g.graph.vertices[e.src];
        je["dst"] = g.graph.vertices[e.dst];
        je["len"] = "l" + std::to_string(i + 1);
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2);
}

std::string path_json(const ParamPath& p, int samples) {
    json j;
    j["names"] = p.names();
    j["breakpoints"] = json::array();
    for (const auto& bp : p.breakpoints()) {
        json jb = json::array();
        for (size_t i = 0; i < bp.size(); ++i)
            jb.push_back(bp.is_exact() ? json(rational_str(bp.exact_value(i)))
                                       : json(bp.value(i)));
        j["breakpoints"].push_back(std::move(jb));
    }
    j["samples"] = samples;
    return j.dump(2);
}

}  // namespace

std::string fixture_json(const std::string& name) {
    if (name == "example1") return poly_to_json(example1_poly());
    if (name == "example1-graph") return example1_graph_json();
    if (name == "example1-vpath") return path_json(example1_vpath(), 64);
    if (name == "example2-teichmuller") return poly_to_json(example2_poly());
    if (name == "example2-gamma-path")
        return path_json(example2_gamma_path(Rational(1, 10), Rational(1, 1000)), 64);
    if (name == "theorem2-family") return poly_to_json(theorem2_family(3));
    if (name == "example3-quotient") return poly_to_json(example3_quotient());
    throw OutOfRange("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_file_names() {
    return {"example1",          "example1-graph",     "example1-vpath",
            "example2-teichmuller", "example2-gamma-path", "theorem2-family",
            "example3-quotient"};
}

}  // namespace polyexp::fixtures
