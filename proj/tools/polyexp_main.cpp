#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyexp/asymptotics.hpp"
#include "polyexp/continuation.hpp"
#include "polyexp/fixtures.hpp"
#include "polyexp/graph.hpp"
#include "polyexp/json_io.hpp"
#include "polyexp/rational_oracle.hpp"
#include "polyexp/zero_finder.hpp"

using namespace polyexp;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string poly_file, graph_file, path_file, aut_file;
    std::string at, p_str, q_str, window, format = "json", out_file;
    double band = 0;
    double tol_residual = 1e-9, tol_cluster = 1e-7, tol_boundary = 1e-8, tol_match = 1e-3;
    double inf_cutoff = 1e3;
    int workers = 0;
    int lambda0 = 1;
    unsigned seed = 0;
};

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_file.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream out(cfg.out_file, std::ios::binary);
        out << text;
    }
}

ZeroFinderOpts zopts_of(const RunConfig& cfg) {
    ZeroFinderOpts z;
    z.cluster_tol = cfg.tol_cluster;
    z.residual_tol = cfg.tol_residual;
    z.boundary_tol = cfg.tol_boundary;
    return z;
}

// Spectrum classes unfolded into the band Im(w) ∈ [0, T) by the 2πr period.
std::vector<SpectrumClass> unfold(const std::vector<SpectrumClass>& classes, double T) {
    std::vector<SpectrumClass> out;
    for (const auto& c : classes) {
        double period = 2 * std::numbers::pi * to_double(c.scale);
        for (double shift = 0; c.w.imag() + shift < T; shift += period) {
            SpectrumClass u = c;
            u.w = Complex(c.w.real(), c.w.imag() + shift);
            out.push_back(u);
        }
    }
    std::sort(out.begin(), out.end(), [](const SpectrumClass& a, const SpectrumClass& b) {
        if (a.w.real() != b.w.real()) return a.w.real() < b.w.real();
        return a.w.imag() < b.w.imag();
    });
    return out;
}

int run_spectrum(const RunConfig& cfg) {
    PolyExponential q = poly_from_file(cfg.poly_file);
    ParamPoint at = param_point_parse(cfg.at, q.params());
    std::vector<SpectrumClass> classes = spectrum_classes(q, at);
    if (cfg.band > 0) classes = unfold(classes, cfg.band);
    emit(cfg, cfg.format == "csv" ? spectrum_to_csv(classes) : spectrum_to_json(classes));
    return 0;
}

int run_order(const RunConfig& cfg) {
    PolyExponential q = poly_from_file(cfg.poly_file);
    ParamPoint at = param_point_parse(cfg.at, q.params());
    OrderedSpectrum os = rho_lambda(q, at);
    json j;
    j["reals"] = json::array();
    for (double r : os.reals()) j["reals"].push_back(fmt_double(r));
    j["rho1"] = fmt_double(os.rho(1));
    j["lambda1"] = fmt_double(os.lambda(1));
    emit(cfg, j.dump(2));
    return 0;
}

int run_track(const RunConfig& cfg) {
    PolyExponential q = poly_from_file(cfg.poly_file);
    PathInput pi = path_from_file(cfg.path_file, q.params());
    double T = cfg.band > 0 ? cfg.band : 2 * std::numbers::pi;
    TrackOpts topts;
    topts.residual_tol = cfg.tol_residual;
    std::vector<Trajectory> trs = track_all(q, pi.path, T, topts);
    emit(cfg, cfg.format == "csv" ? trajectories_to_csv(trs) : trajectories_to_json(trs));
    for (const auto& tr : trs)
        if (tr.status == TrajectoryStatus::CollisionFlagged) return 3;
    return 0;
}

int run_limit_set(const RunConfig& cfg) {
    PolyExponential q = poly_from_file(cfg.poly_file);
    ParamPoint at = param_point_parse(cfg.at, q.params());
    double lo = -2, hi = 2;
    if (!cfg.window.empty()) {
        auto comma = cfg.window.find(',');
        lo = std::stod(cfg.window.substr(0, comma));
        hi = std::stod(cfg.window.substr(comma + 1));
    }
    emit(cfg, intervals_to_json(limit_set(q, at, lo, hi)));
    return 0;
}

// Coefficients and p/q data for boundary_spectrum from an instantiated Q.
struct BoundaryInput {
    std::vector<double> coeffs;
    ExtendedParam p, q;
};

BoundaryInput boundary_input(const PolyExponential& q, const ParamPoint& at, double cutoff) {
    ConcretePolyExp qc = q.instantiate(at);
    BoundaryInput bi;
    for (const auto& t : qc.terms()) bi.coeffs.push_back(t.coeff);
    std::vector<double> ell = exponents_of(qc);
    BarData bd = bar_transform(qc);
    for (double l : ell) {
        double v = l / bd.min_l;
        bi.p.entries.push_back(v > cutoff ? kInf : v);
    }
    for (double l : bd.lbar) {
        double v = l / bd.min_lbar;
        bi.q.entries.push_back(v > cutoff ? kInf : v);
    }
    return bi;
}

int run_boundary(const RunConfig& cfg) {
    PolyExponential q = poly_from_file(cfg.poly_file);
    ParamPoint at = param_point_parse(cfg.at, q.params());
    double T = cfg.band > 0 ? cfg.band : 10.0;
    BoundaryInput bi = boundary_input(q, at, cfg.inf_cutoff);
    if (!cfg.p_str.empty()) bi.p = extended_param_parse(cfg.p_str);
    if (!cfg.q_str.empty()) bi.q = extended_param_parse(cfg.q_str);
    emit(cfg, boundary_to_json(boundary_spectrum(bi.coeffs, bi.p, bi.q, T, 1e-9, zopts_of(cfg))));
    return 0;
}

int run_growth(const RunConfig& cfg) {
    PolyExponential q = poly_from_file(cfg.poly_file);
    PathInput pi = path_from_file(cfg.path_file, q.params());
    double T = cfg.band > 0 ? cfg.band : 2 * std::numbers::pi;

    // Dominant root at the start of the path.
    ConcretePolyExp q0 = q.instantiate(pi.path.at(0.0));
    std::vector<LocatedZero> zeros = zeros_in_band(q0, T, zopts_of(cfg));
    if (zeros.empty()) throw EmptySpectrum("no zero in the starting band");
    LocatedZero dom = zeros.front();
    for (const auto& z : zeros)
        if (z.w.real() > dom.w.real()) dom = z;

    TrackOpts topts;
    topts.residual_tol = cfg.tol_residual;
    Trajectory tr = track(q, pi.path, dom.w, topts);

    std::vector<GrowthSample> samples;
    for (const auto& s : tr.samples) {
        ParamPoint pt(pi.path.names(), s.ell);
        ConcretePolyExp qc = q.instantiate(pt);
        BarData bd = bar_transform(qc);
        samples.push_back({1.0 - s.s, bd.min_l, bd.min_lbar, s.w});
    }

    BoundaryInput bi = boundary_input(q, pi.path.at(1.0), cfg.inf_cutoff);
    if (!cfg.p_str.empty()) bi.p = extended_param_parse(cfg.p_str);
    if (!cfg.q_str.empty()) bi.q = extended_param_parse(cfg.q_str);
    BoundarySpectrum bs = boundary_spectrum(bi.coeffs, bi.p, bi.q, T, 1e-9, zopts_of(cfg));

    GrowthOpts gopts;
    gopts.match_tol = cfg.tol_match;
    GrowthClassification g = growth_rate(samples, bs, gopts);
    json j = json::parse(growth_to_json(g));
    j["boundary"] = json::parse(boundary_to_json(bs));
    j["trajectory_status"] =
        tr.status == TrajectoryStatus::Completed
            ? "completed"
            : (tr.status == TrajectoryStatus::ExitedBand ? "exited-band" : "collision-flagged");
    emit(cfg, j.dump(2));
    return 0;
}

int run_frontier(const RunConfig& cfg) {
    ParamPoint at = param_point_parse(cfg.at);
    std::vector<double> ell = at.values();
    std::sort(ell.begin(), ell.end(), std::greater<>());
    double omega = perron_frontier(ell);
    json j;
    j["omega"] = fmt_double(omega);
    emit(cfg, j.dump(2));
    return 0;
}

std::vector<long long> int_lens_at(const GraphInput& gi, const std::string& at) {
    if (!at.empty()) {
        std::vector<long long> out;
        ParamPoint p = param_point_parse(at);
        for (size_t i = 0; i < p.size(); ++i) {
            Rational r = p.exact_value(i);
            if (boost::multiprecision::denominator(r) != 1 || r < 1)
                throw OutOfRange("graph lengths must be positive integers");
            out.push_back(boost::multiprecision::numerator(r).convert_to<long long>());
        }
        if (out.size() != gi.graph.edges.size())
            throw OutOfRange("length count does not match edge count");
        return out;
    }
    if (!gi.all_integer)
        throw OutOfRange("graph has parametric lengths; pass --at with integer values");
    return gi.int_lens;
}

std::string graph_to_json_text(const DirectedGraph& g, const std::vector<long long>& lens) {
    json j;
    j["vertices"] = g.vertices;
    j["edges"] = json::array();
    for (size_t i = 0; i < g.edges.size(); ++i) {
        json je;
        je["id"] = g.edges[i].id;
        je["src"] = g.vertices[g.edges[i].src];
        je["dst"] = g.vertices[g.edges[i].dst];
        je["len"] = lens.empty() ? 1 : lens[i];
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2);
}

int run_graph_subdivide(const RunConfig& cfg) {
    GraphInput gi = graph_from_file(cfg.graph_file);
    std::vector<long long> lens = int_lens_at(gi, cfg.at);
    DirectedGraph gs = subdivide(gi.graph, lens);
    emit(cfg, graph_to_json_text(gs, std::vector<long long>(gs.edges.size(), 1)));
    return 0;
}

int run_graph_charpoly(const RunConfig& cfg) {
    GraphInput gi = graph_from_file(cfg.graph_file);
    std::vector<long long> lens = int_lens_at(gi, cfg.at);
    RationalPoly xi = char_poly_direct(subdivide(gi.graph, lens));
    json j;
    j["charpoly"] = xi.str();
    j["coeffs"] = json::array();
    for (const auto& c : xi.coeffs()) j["coeffs"].push_back(rational_str(c));
    emit(cfg, j.dump(2));
    return 0;
}

int run_graph_perron(const RunConfig& cfg) {
    GraphInput gi = graph_from_file(cfg.graph_file);
    ExponentPolynomial p = perron_poly(gi.graph, gi.lens);
    json j;
    j["perron"] = p.str();
    if (!cfg.at.empty()) {
        std::vector<long long> lens = int_lens_at(gi, cfg.at);
        std::vector<Rational> vals(lens.begin(), lens.end());
        std::vector<std::string> names;
        for (const auto& f : gi.lens)
            if (!f.is_constant()) names.push_back(f.coeffs().begin()->first);
        ParamPoint at = gi.all_integer ? ParamPoint({}, std::vector<Rational>{})
                                       : ParamPoint(names, vals);
        j["specialized"] = p.specialize_int(at).str();
    }
    emit(cfg, j.dump(2));
    return 0;
}

int run_graph_quotient(const RunConfig& cfg) {
    GraphInput gi = graph_from_file(cfg.graph_file);
    GraphAutomorphism t = automorphism_from_file(cfg.aut_file, gi.graph);
    ExponentPolynomial p = quotient_poly(gi.graph, gi.lens, t, cfg.lambda0);
    json j;
    j["lambda0"] = cfg.lambda0;
    j["quotient"] = p.str();
    emit(cfg, j.dump(2));
    return 0;
}

int run_graph_audit(const RunConfig& cfg) {
    GraphInput gi = graph_from_file(cfg.graph_file);
    std::vector<long long> lens = int_lens_at(gi, cfg.at);
    emit(cfg, cor2_to_json(cor2_audit(gi.graph, lens)));
    return 0;
}

int run_fixtures(const RunConfig& cfg, bool list_only, const std::string& name,
                 const std::string& write_dir) {
    if (list_only) {
        std::string out;
        for (const auto& n : fixtures::list()) out += n + "\n";
        emit(cfg, out);
        return 0;
    }
    if (!name.empty()) {
        emit(cfg, fixtures::fixture_json(name));
        return 0;
    }
    if (!write_dir.empty()) {
        for (const auto& n : fixtures::fixture_file_names()) {
            std::ofstream out(write_dir + "/" + n + ".json", std::ios::binary);
            if (!out) throw OutOfRange("cannot write to '" + write_dir + "'");
            out << fixtures::fixture_json(n);
        }
        return 0;
    }
    throw OutOfRange("fixtures: pass --list, --name, or --write");
}

bool is_numeric_failure(const Error& e) {
    static const char* codes[] = {"ZeroOnBoundary", "CollisionDetected", "Inconclusive",
                                  "NoFrontier",     "BudgetExceeded"};
    for (const char* c : codes)
        if (e.code() == c) return true;
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zero sets of poly-exponential equations with varying exponents"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* w = std::getenv("POLYEXP_WORKERS")) cfg.workers = std::atoi(w);

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", cfg.out_file, "write results to a file instead of stdout");
        sub->add_option("--workers", cfg.workers, "worker count (default POLYEXP_WORKERS)");
        sub->add_option("--tol-residual", cfg.tol_residual, "residual tolerance");
        sub->add_option("--tol-cluster", cfg.tol_cluster, "zero clustering tolerance");
        sub->add_option("--tol-boundary", cfg.tol_boundary, "contour boundary tolerance");
        sub->add_option("--tol-match", cfg.tol_match, "boundary matching tolerance");
    };

    auto* spectrum = app.add_subcommand("spectrum", "spectrum classes of Q at a rational point");
    spectrum->add_option("--poly", cfg.poly_file)->required();
    spectrum->add_option("--at", cfg.at)->required();
    spectrum->add_option("--band", cfg.band, "unfold classes into Im(w) in [0, T)");
    add_common(spectrum);

    auto* order = app.add_subcommand("order", "ordered real parts rho_i / lambda_i");
    order->add_option("--poly", cfg.poly_file)->required();
    order->add_option("--at", cfg.at)->required();
    add_common(order);

    auto* track_cmd = app.add_subcommand("track", "continue all band zeros along a path");
    track_cmd->add_option("--poly", cfg.poly_file)->required();
    track_cmd->add_option("--path", cfg.path_file)->required();
    track_cmd->add_option("--band", cfg.band);
    add_common(track_cmd);

    auto* limit = app.add_subcommand("limit-set", "Lambda(p) intervals in a window");
    limit->add_option("--poly", cfg.poly_file)->required();
    limit->add_option("--at", cfg.at)->required();
    limit->add_option("--window", cfg.window, "LO,HI (default -2,2)");
    add_common(limit);

    auto* boundary = app.add_subcommand("boundary", "boundary spectrum Z(p,q)");
    boundary->add_option("--poly", cfg.poly_file)->required();
    boundary->add_option("--at", cfg.at)->required();
    boundary->add_option("--p", cfg.p_str, "left exponents (inf allowed)");
    boundary->add_option("--q", cfg.q_str, "right exponents (inf allowed)");
    boundary->add_option("--band", cfg.band);
    boundary->add_option("--inf-cutoff", cfg.inf_cutoff);
    add_common(boundary);

    auto* growth = app.add_subcommand("growth", "growth classification along a path");
    growth->add_option("--poly", cfg.poly_file)->required();
    growth->add_option("--path", cfg.path_file)->required();
    growth->add_option("--band", cfg.band);
    growth->add_option("--p", cfg.p_str);
    growth->add_option("--q", cfg.q_str);
    growth->add_option("--inf-cutoff", cfg.inf_cutoff);
    add_common(growth);

    auto* frontier = app.add_subcommand("frontier", "Perron frontier omega(ell)");
    frontier->add_option("--at", cfg.at)->required();
    add_common(frontier);

    auto* gsub = app.add_subcommand("graph-subdivide", "subdivision graph Gamma_ell");
    gsub->add_option("--graph", cfg.graph_file)->required();
    gsub->add_option("--at", cfg.at, "integer lengths (when the file is parametric)");
    add_common(gsub);

    auto* gchar = app.add_subcommand("graph-charpoly", "char poly of the subdivision");
    gchar->add_option("--graph", cfg.graph_file)->required();
    gchar->add_option("--at", cfg.at);
    add_common(gchar);

    auto* gperron = app.add_subcommand("graph-perron", "symbolic Perron polynomial");
    gperron->add_option("--graph", cfg.graph_file)->required();
    gperron->add_option("--at", cfg.at, "also emit the specialization at integer lengths");
    add_common(gperron);

    auto* gquot = app.add_subcommand("graph-quotient", "Prop-5 quotient polynomial");
    gquot->add_option("--graph", cfg.graph_file)->required();
    gquot->add_option("--aut", cfg.aut_file)->required();
    gquot->add_option("--lambda0", cfg.lambda0, "+1 or -1");
    add_common(gquot);

    auto* gaudit = app.add_subcommand("graph-audit", "Corollary-2 diagonalizability audit");
    gaudit->add_option("--graph", cfg.graph_file)->required();
    gaudit->add_option("--at", cfg.at);
    add_common(gaudit);

    bool fx_list = false;
    std::string fx_name, fx_write;
    auto* fx = app.add_subcommand("fixtures", "built-in fixture inputs");
    fx->add_flag("--list", fx_list);
    fx->add_option("--name", fx_name, "print one fixture file body");
    fx->add_option("--write", fx_write, "write all fixture files into a directory");
    fx->add_option("--seed", cfg.seed, "corpus generation seed (reserved)");
    add_common(fx);

    CLI11_PARSE(app, argc, argv);

    try {
        if (spectrum->parsed()) return run_spectrum(cfg);
        if (order->parsed()) return run_order(cfg);
        if (track_cmd->parsed()) return run_track(cfg);
        if (limit->parsed()) return run_limit_set(cfg);
        if (boundary->parsed()) return run_boundary(cfg);
        if (growth->parsed()) return run_growth(cfg);
        if (frontier->parsed()) return run_frontier(cfg);
        if (gsub->parsed()) return run_graph_subdivide(cfg);
        if (gchar->parsed()) return run_graph_charpoly(cfg);
        if (gperron->parsed()) return run_graph_perron(cfg);
        if (gquot->parsed()) return run_graph_quotient(cfg);
        if (gaudit->parsed()) return run_graph_audit(cfg);
        if (fx->parsed()) return run_fixtures(cfg, fx_list, fx_name, fx_write);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_numeric_failure(e) ? 3 : 2;
    } catch (const json::exception& e) {
        std::cerr << "error: BadInput: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: NumericFailure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
