#include "polyexp/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace polyexp {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw OutOfRange("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string fmt_double(double x) {
    if (x == 0.0) x = 0.0;  // normalize -0
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return rational_from_double(j.get<double>());
    throw OutOfRange("expected a rational (number or \"p/q\" string)");
}

json rational_to_json(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1 &&
        boost::multiprecision::abs(boost::multiprecision::numerator(r)) < Int(1) << 53)
        return json(boost::multiprecision::numerator(r).convert_to<long long>());
    return json(rational_str(r));
}

}  // namespace

PolyExponential poly_from_json(const std::string& text) {
    json j = json::parse(text);
    Rational a0 = rational_from_json(j.at("a0"));
    std::vector<std::string> params = j.value("params", std::vector<std::string>{});
    std::vector<PolyExponential::Term> terms;
    for (const auto& jt : j.at("terms")) {
        PolyExponential::Term t;
        t.coeff = rational_from_json(jt.at("coeff"));
        for (const auto& [key, val] : jt.at("exponent").items()) {
            Rational c = rational_from_json(val);
            if (key == "const")
                t.exponent.set_constant(c);
            else
                t.exponent.set_coeff(key, c);
        }
        terms.push_back(std::move(t));
    }
    return PolyExponential(std::move(a0), std::move(params), std::move(terms));
}

PolyExponential poly_from_file(const std::string& path) { return poly_from_json(read_file(path)); }

std::string poly_to_json(const PolyExponential& q) {
    json j;
    j["a0"] = rational_to_json(q.a0());
    j["params"] = q.params();
    j["terms"] = json::array();
    for (const auto& t : q.terms()) {
        json jt;
        jt["coeff"] = rational_to_json(t.coeff);
        json je = json::object();
        for (const auto& [n, c] : t.exponent.coeffs()) je[n] = rational_str(c);
        if (t.exponent.constant() != 0) je["const"] = rational_str(t.exponent.constant());
        jt["exponent"] = std::move(je);
        j["terms"].push_back(std::move(jt));
    }
    return j.dump(2);
}

GraphInput graph_from_json(const std::string& text) {
    json j = json::parse(text);
    GraphInput out;
    out.graph.vertices = j.at("vertices").get<std::vector<std::string>>();
    for (const auto& je : j.at("edges")) {
        DirectedGraph::Edge e;
        e.id = je.at("id").get<std::string>();
        auto vidx = [&](const json& v) {
            if (v.is_number_integer()) return v.get<int>();
            return out.graph.vertex_index(v.get<std::string>());
        };
        e.src = vidx(je.at("src"));
        e.dst = vidx(je.at("dst"));
        out.graph.edges.push_back(std::move(e));
        const json& jl = je.at("len");
        if (jl.is_number_integer()) {
            long long l = jl.get<long long>();
            out.lens.push_back(LinearForm(Rational(l)));
            out.int_lens.push_back(l);
        } else {
            out.lens.push_back(LinearForm::variable(jl.get<std::string>()));
            out.all_integer = false;
        }
    }
    out.graph.validate();
    if (!out.all_integer) out.int_lens.clear();
    return out;
}

GraphInput graph_from_file(const std::string& path) { return graph_from_json(read_file(path)); }

PathInput path_from_json(const std::string& text, std::vector<std::string> names) {
    json j = json::parse(text);
    std::vector<ParamPoint> bps;
    if (j.contains("names") && names.empty())
        names = j.at("names").get<std::vector<std::string>>();
    for (const auto& jb : j.at("breakpoints")) {
        std::vector<Rational> vals;
        for (const auto& v : jb) vals.push_back(rational_from_json(v));
        if (names.empty())
            bps.push_back(ParamPoint::ell(vals));
        else
            bps.push_back(ParamPoint(names, vals));
    }
    PathInput out{ParamPath(std::move(bps)), j.value("samples", 0)};
    return out;
}

PathInput path_from_file(const std::string& path, std::vector<std::string> names) {
    return path_from_json(read_file(path), std::move(names));
}

GraphAutomorphism automorphism_from_json(const std::string& text, const DirectedGraph& g) {
    json j = json::parse(text);
    GraphAutomorphism t;
    const json& jv = j.at("vertices");
    const json& je = j.at("edges");
    if (jv.is_array()) {
        t.vperm = jv.get<std::vector<int>>();
    } else {
        t.vperm.assign(g.vertices.size(), -1);
        for (const auto& [from, to] : jv.items())
            t.vperm[g.vertex_index(from)] = g.vertex_index(to.get<std::string>());
    }
    auto edge_index = [&](const std::string& id) {
        for (size_t i = 0; i < g.edges.size(); ++i)
            if (g.edges[i].id == id) return static_cast<int>(i);
        throw OutOfRange("unknown edge '" + id + "'");
    };
    if (je.is_array()) {
        t.eperm = je.get<std::vector<int>>();
    } else {
        t.eperm.assign(g.edges.size(), -1);
        for (const auto& [from, to] : je.items())
            t.eperm[edge_index(from)] = edge_index(to.get<std::string>());
    }
    return t;
}

GraphAutomorphism automorphism_from_file(const std::string& path, const DirectedGraph& g) {
    return automorphism_from_json(read_file(path), g);
}

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

}  // namespace

ExtendedParam extended_param_parse(const std::string& text) {
    ExtendedParam out;
    std::vector<std::string> items;
    if (!text.empty() && text.front() == '[') {
        for (const auto& v : json::parse(text))
            items.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    } else {
        items = split_commas(text);
    }
    for (const auto& s : items) {
        if (s == "inf" || s == "Infinity")
            out.entries.push_back(kInf);
        else
            out.entries.push_back(to_double(parse_rational(s)));
    }
    return out;
}

ParamPoint param_point_parse(const std::string& text, std::vector<std::string> names) {
    std::vector<Rational> vals;
    for (const auto& s : split_commas(text)) vals.push_back(parse_rational(s));
    if (names.empty()) return ParamPoint::ell(std::move(vals));
    if (names.size() != vals.size()) throw OutOfRange("parameter count mismatch");
    return ParamPoint(std::move(names), std::move(vals));
}

// --- result serialization --------------------------------------------------

std::string spectrum_to_json(const std::vector<SpectrumClass>& classes) {
    json j = json::array();
    int id = 0;
    for (const auto& c : classes) {
        json jc;
        jc["class_id"] = id++;
        jc["re"] = fmt_double(c.w.real());
        jc["im"] = fmt_double(c.w.imag());
        jc["t_re"] = fmt_double(c.t.real());
        jc["t_im"] = fmt_double(c.t.imag());
        jc["multiplicity"] = c.multiplicity;
        jc["residual"] = fmt_double(c.residual);
        jc["scale"] = rational_str(c.scale);
        j.push_back(std::move(jc));
    }
    return j.dump(2);
}

std::string spectrum_to_csv(const std::vector<SpectrumClass>& classes) {
    std::ostringstream os;
    os << "re,im,multiplicity,residual,class_id\n";
    int id = 0;
    for (const auto& c : classes)
        os << fmt_double(c.w.real()) << "," << fmt_double(c.w.imag()) << "," << c.multiplicity
           << "," << fmt_double(c.residual) << "," << id++ << "\n";
    return os.str();
}

std::string zeros_to_json(const std::vector<LocatedZero>& zeros) {
    json j = json::array();
    int id = 0;
    for (const auto& z : zeros) {
        json jz;
        jz["class_id"] = id++;
        jz["re"] = fmt_double(z.w.real());
        jz["im"] = fmt_double(z.w.imag());
        jz["multiplicity"] = z.multiplicity;
        jz["residual"] = fmt_double(z.residual);
        j.push_back(std::move(jz));
    }
    return j.dump(2);
}

std::string zeros_to_csv(const std::vector<LocatedZero>& zeros) {
    std::ostringstream os;
    os << "re,im,multiplicity,residual,class_id\n";
    int id = 0;
    for (const auto& z : zeros)
        os << fmt_double(z.w.real()) << "," << fmt_double(z.w.imag()) << "," << z.multiplicity
           << "," << fmt_double(z.residual) << "," << id++ << "\n";
    return os.str();
}

namespace {

const char* status_name(TrajectoryStatus s) {
    switch (s) {
        case TrajectoryStatus::Completed: return "completed";
        case TrajectoryStatus::ExitedBand: return "exited-band";
        case TrajectoryStatus::CollisionFlagged: return "collision-flagged";
    }
    return "?";
}

}  // namespace

std::string trajectories_to_json(const std::vector<Trajectory>& trajectories) {
    json j = json::array();
    for (const auto& tr : trajectories) {
        json jt;
        jt["status"] = status_name(tr.status);
        jt["samples"] = json::array();
        for (const auto& s : tr.samples) {
            json js;
            js["s"] = fmt_double(s.s);
            js["ell"] = json::array();
            for (double l : s.ell) js["ell"].push_back(fmt_double(l));
            js["re"] = fmt_double(s.w.real());
            js["im"] = fmt_double(s.w.imag());
            js["residual"] = fmt_double(s.residual);
            jt["samples"].push_back(std::move(js));
        }
        if (!tr.collision_cluster.empty()) {
            jt["collision_cluster"] = json::array();
            for (const auto& z : tr.collision_cluster) {
                json jz;
                jz["re"] = fmt_double(z.w.real());
                jz["im"] = fmt_double(z.w.imag());
                jz["multiplicity"] = z.multiplicity;
                jt["collision_cluster"].push_back(std::move(jz));
            }
        }
        j.push_back(std::move(jt));
    }
    return j.dump(2);
}

std::string trajectories_to_csv(const std::vector<Trajectory>& trajectories) {
    std::ostringstream os;
    os << "trajectory,s";
    size_t dim = trajectories.empty() || trajectories[0].samples.empty()
                     ? 0
                     : trajectories[0].samples[0].ell.size();
    for (size_t i = 1; i <= dim; ++i) os << ",l" << i;
    os << ",re,im,residual,status\n";
    int id = 0;
    for (const auto& tr : trajectories) {
        for (const auto& s : tr.samples) {
            os << id << "," << fmt_double(s.s);
            for (double l : s.ell) os << "," << fmt_double(l);
            os << "," << fmt_double(s.w.real()) << "," << fmt_double(s.w.imag()) << ","
               << fmt_double(s.residual) << "," << status_name(tr.status) << "\n";
        }
        ++id;
    }
    return os.str();
}

std::string intervals_to_json(const IntervalSet& s) {
    json j = json::array();
    for (auto [a, b] : s.intervals) j.push_back({fmt_double(a), fmt_double(b)});
    json out;
    out["intervals"] = std::move(j);
    return out.dump(2);
}

namespace {

json boundary_list(const std::vector<BoundaryZero>& zs) {
    json j = json::array();
    for (const auto& z : zs) {
        json jz;
        jz["re"] = fmt_double(z.w.real());
        jz["im"] = fmt_double(z.w.imag());
        jz["multiplicity"] = z.multiplicity;
        jz["side"] = z.side == BoundaryZero::Side::Left
                         ? "left"
                         : (z.side == BoundaryZero::Side::Right ? "right" : "axis-ambiguous");
        j.push_back(std::move(jz));
    }
    return j;
}

}  // namespace

std::string boundary_to_json(const BoundarySpectrum& b) {
    json j;
    j["band"] = fmt_double(b.band);
    j["left"] = boundary_list(b.left);
    j["right"] = boundary_list(b.right);
    j["axis_ambiguous"] = boundary_list(b.axis_ambiguous);
    return j.dump(2);
}

std::string growth_to_json(const GrowthClassification& g) {
    json j;
    switch (g.kind) {
        case GrowthClassification::Kind::LeftRate: j["kind"] = "left-rate"; break;
        case GrowthClassification::Kind::RightRate: j["kind"] = "right-rate"; break;
        case GrowthClassification::Kind::Bounded: j["kind"] = "bounded"; break;
    }
    j["lambda"] = fmt_double(g.lambda);
    j["alt_fit"] = fmt_double(g.alt_fit);
    if (std::isfinite(g.matched_boundary_zero.real())) {
        j["matched_boundary_zero"] = {fmt_double(g.matched_boundary_zero.real()),
                                      fmt_double(g.matched_boundary_zero.imag())};
        j["match_error"] = fmt_double(g.match_error);
    }
    return j.dump(2);
}

std::string cor2_to_json(const Cor2Report& r) {
    json j;
    j["delta"] = r.delta;
    j["ell_total"] = r.ell_total;
    j["num_vertices"] = r.num_vertices;
    j["num_edges"] = r.num_edges;
    j["crit_not_diagonalizable"] = r.crit_not_diagonalizable;
    j["crit_multiple_roots"] = r.crit_multiple_roots;
    j["diagonalizable"] = r.diagonalizable;
    j["has_multiple_roots"] = r.has_multiple_roots;
    j["zero_alg_mult"] = r.zero_alg_mult;
    j["zero_geo_mult"] = r.zero_geo_mult;
    j["zero_geo_bound"] = r.zero_geo_bound;
    j["vertices_without_outgoing"] = r.vertices_without_outgoing;
    return j.dump(2);
}

}  // namespace polyexp
