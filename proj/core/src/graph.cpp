#include "polyexp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polyexp/roots.hpp"

namespace polyexp {

int DirectedGraph::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return static_cast<int>(i);
    throw OutOfRange("unknown vertex '" + name + "'");
}

void DirectedGraph::validate() const {
    int n = static_cast<int>(vertices.size());
    for (const auto& e : edges)
        if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
            throw OutOfRange("edge '" + e.id + "' references a missing vertex");
}

DirectedGraph subdivide(const DirectedGraph& g, const std::vector<long long>& lens) {
    if (lens.size() != g.edges.size()) throw OutOfRange("length assignment size mismatch");
    for (long long l : lens)
        if (l < 1) throw OutOfRange("subdivision lengths must be >= 1");
    DirectedGraph out;
    out.vertices = g.vertices;
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        const auto& e = g.edges[ei];
        long long k = lens[ei];
        int prev = e.src;
        for (long long j = 1; j < k; ++j) {
            out.vertices.push_back(e.id + "." + std::to_string(j));
            int mid = static_cast<int>(out.vertices.size()) - 1;
            out.edges.push_back({e.id + "." + std::to_string(j), prev, mid});
            prev = mid;
        }
        out.edges.push_back({e.id + "." + std::to_string(k), prev, e.dst});
    }
    return out;
}

IntMatrix adjacency(const DirectedGraph& g) {
    size_t n = g.vertices.size();
    IntMatrix a(n, std::vector<Int>(n, Int(0)));
    for (const auto& e : g.edges) a[e.src][e.dst] += 1;
    return a;
}

// Berkowitz: division-free exact characteristic polynomial.
RationalPoly char_poly(const IntMatrix& a) {
    size_t n = a.size();
    std::vector<Int> p{Int(1)};  // descending coefficients, char poly of the 0x0 block
    for (size_t k = 1; k <= n; ++k) {
        // Toeplitz column t: t0=1, t1=-a_kk, t_{j+1} = -(R · M^{j-1} · C).
        std::vector<Int> tv(k + 1, Int(0));
        tv[0] = 1;
        tv[1] = -a[k - 1][k - 1];
        std::vector<Int> v(k - 1);
        for (size_t i = 0; i + 1 < k; ++i) v[i] = a[i][k - 1];  // C
        for (size_t j = 2; j <= k; ++j) {
            Int s = 0;
            for (size_t i = 0; i + 1 < k; ++i) s += a[k - 1][i] * v[i];  // R · v
            tv[j] = -s;
            if (j < k) {  // v <- M v
                std::vector<Int> nv(k - 1, Int(0));
                for (size_t r = 0; r + 1 < k; ++r)
                    for (size_t c2 = 0; c2 + 1 < k; ++c2) nv[r] += a[r][c2] * v[c2];
                v = std::move(nv);
            }
        }
        std::vector<Int> np(k + 1, Int(0));
        for (size_t i = 0; i <= k; ++i)
            for (size_t j = 0; j < p.size() && j <= i; ++j)
                if (i - j <= k) np[i] += tv[i - j] * p[j];
        p = std::move(np);
    }
    // Convert descending Int to ascending RationalPoly.
    std::vector<Rational> c(n + 1);
    for (size_t i = 0; i <= n; ++i) c[n - i] = Rational(p[i]);
    return RationalPoly(std::move(c));
}

IntMatrix edge_adjacency(const DirectedGraph& g) {
    size_t m = g.edges.size();
    IntMatrix b(m, std::vector<Int>(m, Int(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j)
            if (g.edges[i].dst == g.edges[j].src) b[i][j] = 1;
    return b;
}

RationalPoly char_poly_direct(const DirectedGraph& g) { return char_poly(edge_adjacency(g)); }

namespace {

ExponentPolynomial det_minus(const std::vector<std::vector<ExponentPolynomial>>& m) {
    // det(I − m) by Laplace expansion along the first remaining row, with the
    // identity folded in on the fly.
    size_t n = m.size();
    std::vector<size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    struct Rec {
        const std::vector<std::vector<ExponentPolynomial>>& m;
        ExponentPolynomial run(size_t row, std::vector<size_t>& cols) {
            if (cols.empty()) return ExponentPolynomial(Rational(1));
            ExponentPolynomial acc;
            for (size_t ci = 0; ci < cols.size(); ++ci) {
                size_t c = cols[ci];
                ExponentPolynomial entry = ExponentPolynomial(Rational(row == c ? 1 : 0)) - m[row][c];
                if (entry.is_zero()) continue;
                std::vector<size_t> rest;
                for (size_t j = 0; j < cols.size(); ++j)
                    if (j != ci) rest.push_back(cols[j]);
                ExponentPolynomial sub = run(row + 1, rest);
                ExponentPolynomial contrib = entry * sub;
                if (ci % 2 == 0)
                    acc += contrib;
                else
                    acc -= contrib;
            }
            return acc;
        }
    } rec{m};
    return rec.run(0, cols);
}

}  // namespace

ExponentPolynomial perron_poly(const DirectedGraph& g, const std::vector<LinearForm>& lens) {
    if (lens.size() != g.edges.size()) throw OutOfRange("length assignment size mismatch");
    size_t n = g.vertices.size();
    std::vector<std::vector<ExponentPolynomial>> a(n, std::vector<ExponentPolynomial>(n));
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        const auto& e = g.edges[ei];
        a[e.src][e.dst] += ExponentPolynomial::monomial(lens[ei]);
    }
    return det_minus(a);
}

ExponentPolynomial perron_poly(const DirectedGraph& g, const std::vector<long long>& lens) {
    std::vector<LinearForm> fs;
    for (long long l : lens) fs.push_back(LinearForm(Rational(l)));
    return perron_poly(g, fs);
}

std::vector<Cycle> simple_cycles(const DirectedGraph& g, const std::vector<long long>& lens,
                                 size_t budget) {
    if (lens.size() != g.edges.size()) throw OutOfRange("length assignment size mismatch");
    g.validate();
    int n = static_cast<int>(g.vertices.size());
    if (n > 62) throw BudgetExceeded("vertex-mask limit exceeded");

    std::vector<std::vector<int>> out_edges(n);
    for (size_t i = 0; i < g.edges.size(); ++i) out_edges[g.edges[i].src].push_back(static_cast<int>(i));

    std::vector<Cycle> cycles;
    std::vector<int> path;
    // Cycles whose minimal vertex is v0, visiting only vertices >= v0.
    for (int v0 = 0; v0 < n; ++v0) {
        struct Dfs {
            const DirectedGraph& g;
            const std::vector<long long>& lens;
            const std::vector<std::vector<int>>& out_edges;
            std::vector<Cycle>& cycles;
            std::vector<int>& path;
            size_t budget;
            int v0;
            unsigned long long visited = 0;
            long long length = 0;

            void run(int v) {
                for (int ei : out_edges[v]) {
                    int u = g.edges[ei].dst;
                    if (u < v0) continue;
                    if (u == v0) {
                        if (cycles.size() >= budget)
                            throw BudgetExceeded("cycle budget exhausted at " +
                                                 std::to_string(cycles.size()));
                        path.push_back(ei);
                        cycles.push_back(
                            {path, visited | (1ull << v0), length + lens[ei]});
                        path.pop_back();
                        continue;
                    }
                    if (visited & (1ull << u)) continue;
                    visited |= 1ull << u;
                    path.push_back(ei);
                    length += lens[ei];
                    run(u);
                    length -= lens[ei];
                    path.pop_back();
                    visited &= ~(1ull << u);
                }
            }
        } dfs{g, lens, out_edges, cycles, path, budget, v0};
        dfs.run(v0);
    }
    return cycles;
}

RationalPoly char_poly_multicycle(const DirectedGraph& g, const std::vector<long long>& lens,
                                  size_t budget) {
    std::vector<Cycle> cycles = simple_cycles(g, lens, budget);
    long long total = std::accumulate(lens.begin(), lens.end(), 0ll);

    std::vector<Rational> coeffs(static_cast<size_t>(total) + 1, Rational(0));
    coeffs[static_cast<size_t>(total)] = 1;  // the empty multi-cycle

    // Enumerate vertex-disjoint collections.
    struct Rec {
        const std::vector<Cycle>& cycles;
        std::vector<Rational>& coeffs;
        long long total;
        void run(size_t i, unsigned long long used, int n, long long len) {
            if (i == cycles.size()) {
                if (n > 0) coeffs[static_cast<size_t>(total - len)] += (n % 2 ? -1 : 1);
                return;
            }
            run(i + 1, used, n, len);
            if (!(cycles[i].vertex_mask & used))
                run(i + 1, used | cycles[i].vertex_mask, n + 1, len + cycles[i].length);
        }
    } rec{cycles, coeffs, total};
    rec.run(0, 0, 0, 0);
    return RationalPoly(std::move(coeffs));
}

Prop4Report prop4_check(const DirectedGraph& g, const std::vector<long long>& lens, double tol) {
    Prop4Report rep;
    DirectedGraph gs = subdivide(g, lens);
    rep.xi = char_poly_direct(gs);
    rep.p_spec = perron_poly(g, lens).specialize_int(ParamPoint({}, std::vector<Rational>{}));

    long long total = std::accumulate(lens.begin(), lens.end(), 0ll);
    // Exact identity ξ(t) = t^{|ℓ|} P(1/t): reversed coefficients over degree |ℓ|.
    std::vector<Rational> rev(static_cast<size_t>(total) + 1, Rational(0));
    for (int i = 0; i <= rep.p_spec.degree(); ++i)
        rev[static_cast<size_t>(total) - i] = rep.p_spec[i];
    rep.identity_exact = (rep.xi == RationalPoly(std::move(rev)));

    // Numeric eigenvalue comparison on squarefree parts.
    auto distinct_roots = [](const RationalPoly& p) {
        std::vector<Complex> out;
        for (const auto& f : squarefree_decomposition(p))
            if (f.degree() >= 1)
                for (Complex z : poly_roots_numeric(f.to_doubles())) out.push_back(z);
        return out;
    };
    RationalPoly xi_nz = rep.xi.shifted_down(rep.xi.ord0());
    std::vector<Complex> eig =
        xi_nz.degree() >= 1 ? distinct_roots(xi_nz) : std::vector<Complex>{};
    std::vector<Complex> inv_zeros;
    if (rep.p_spec.degree() >= 1)
        for (Complex z : distinct_roots(rep.p_spec)) inv_zeros.push_back(1.0 / z);

    double h = 0;
    auto one_sided = [&](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        double worst = 0;
        for (Complex x : a) {
            double best = b.empty() ? (a.empty() ? 0 : 1e300) : 1e300;
            for (Complex y : b) best = std::min(best, std::abs(x - y));
            if (b.empty()) best = a.empty() ? 0 : 1e300;
            worst = std::max(worst, best);
        }
        return worst;
    };
    if (eig.empty() && inv_zeros.empty())
        h = 0;
    else
        h = std::max(one_sided(eig, inv_zeros), one_sided(inv_zeros, eig));
    rep.hausdorff = h;
    rep.eigen_match = h <= tol;
    return rep;
}

namespace {

void check_automorphism(const DirectedGraph& g, const GraphAutomorphism& t) {
    int n = static_cast<int>(g.vertices.size());
    int m = static_cast<int>(g.edges.size());
    if (static_cast<int>(t.vperm.size()) != n || static_cast<int>(t.eperm.size()) != m)
        throw NotInvariant("automorphism size mismatch");
    std::vector<bool> seen(n, false), eseen(m, false);
    for (int v : t.vperm) {
        if (v < 0 || v >= n || seen[v]) throw NotInvariant("vertex map is not a bijection");
        seen[v] = true;
    }
    for (int e : t.eperm) {
        if (e < 0 || e >= m || eseen[e]) throw NotInvariant("edge map is not a bijection");
        eseen[e] = true;
    }
    for (int e = 0; e < m; ++e) {
        if (t.vperm[g.edges[e].src] != g.edges[t.eperm[e]].src ||
            t.vperm[g.edges[e].dst] != g.edges[t.eperm[e]].dst)
            throw NotInvariant("edge map incompatible with incidence");
    }
}

int perm_order(const std::vector<int>& p) {
    int n = static_cast<int>(p.size());
    std::vector<bool> seen(n, false);
    long long ord = 1;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = p[j];
            ++len;
        }
        ord = std::lcm(ord, static_cast<long long>(len));
    }
    return static_cast<int>(ord);
}

}  // namespace

ExponentPolynomial quotient_poly(const DirectedGraph& g, const std::vector<LinearForm>& lens,
                                 const GraphAutomorphism& t, int lambda0) {
    if (lens.size() != g.edges.size()) throw OutOfRange("length assignment size mismatch");
    check_automorphism(g, t);
    for (size_t e = 0; e < lens.size(); ++e)
        if (!(lens[e] == lens[static_cast<size_t>(t.eperm[e])]))
            throw NotInvariant("edge lengths are not T-invariant");
    if (lambda0 != 1 && lambda0 != -1)
        throw BadEigenvalue("only the real roots of unity ±1 are supported");
    int order = perm_order(t.vperm);
    long long pw = (lambda0 == -1 && order % 2 == 1) ? -1 : 1;
    if (pw != 1) throw BadEigenvalue("λ₀^order(T) ≠ 1");

    // Orbit representatives (min index) and μ(v): v = T^{μ(v)}(rep).
    int n = static_cast<int>(g.vertices.size());
    std::vector<int> rep(n, -1), mu(n, 0), rep_index(n, -1);
    std::vector<int> reps;
    for (int i = 0; i < n; ++i) {
        if (rep[i] != -1) continue;
        int j = i, k = 0;
        while (rep[j] == -1) {
            rep[j] = i;
            mu[j] = k;
            j = t.vperm[j];
            ++k;
        }
        rep_index[i] = static_cast<int>(reps.size());
        reps.push_back(i);
    }

    size_t s = reps.size();
    std::vector<std::vector<ExponentPolynomial>> d(s, std::vector<ExponentPolynomial>(s));
    for (size_t ei = 0; ei < g.edges.size(); ++ei) {
        const auto& e = g.edges[ei];
        if (rep[e.src] != e.src) continue;  // rows indexed by representatives
        int w1 = rep_index[e.src];
        int w2 = rep_index[rep[e.dst]];
        Rational c = (lambda0 == -1 && mu[e.dst] % 2 == 1) ? Rational(-1) : Rational(1);
        d[w1][w2] += ExponentPolynomial::monomial(lens[ei], c);
    }
    return det_minus(d);
}

ExponentPolynomial quotient_poly(const DirectedGraph& g, const std::vector<long long>& lens,
                                 const GraphAutomorphism& t, int lambda0) {
    std::vector<LinearForm> fs;
    for (long long l : lens) fs.push_back(LinearForm(Rational(l)));
    return quotient_poly(g, fs, t, lambda0);
}

namespace {

long long rank_rational(const IntMatrix& a) {
    size_t n = a.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[rank]);
        for (size_t i = rank + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rational f = m[i][col] / m[rank][col];
            for (size_t j = col; j < n; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

// Exact annihilation test s(A) = 0 after clearing denominators of s.
bool annihilates(const RationalPoly& s, const IntMatrix& a) {
    Int lcm_den = 1;
    for (const auto& c : s.coeffs())
        lcm_den = boost::multiprecision::lcm(lcm_den, Int(boost::multiprecision::denominator(c)));
    std::vector<Int> ic(s.coeffs().size());
    for (size_t i = 0; i < ic.size(); ++i)
        ic[i] = boost::multiprecision::numerator(s.coeffs()[i] * Rational(lcm_den));

    size_t n = a.size();
    IntMatrix acc(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) acc[i][i] = ic.back();
    for (size_t k = ic.size() - 1; k-- > 0;) {  // Horner: acc = acc*A + ic[k]·I
        IntMatrix next(n, std::vector<Int>(n, Int(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (acc[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j) next[i][j] += acc[i][l] * a[l][j];
            }
        for (size_t i = 0; i < n; ++i) next[i][i] += ic[k];
        acc = std::move(next);
    }
    for (const auto& row : acc)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

}  // namespace

Cor2Report cor2_audit(const DirectedGraph& g, const std::vector<long long>& lens) {
    if (lens.size() != g.edges.size()) throw OutOfRange("length assignment size mismatch");
    Cor2Report rep;
    rep.num_vertices = static_cast<long long>(g.vertices.size());
    rep.num_edges = static_cast<long long>(g.edges.size());
    rep.ell_total = std::accumulate(lens.begin(), lens.end(), 0ll);
    for (size_t v = 0; v < g.vertices.size(); ++v) {
        long long mx = 0;
        bool any = false;
        for (size_t e = 0; e < g.edges.size(); ++e)
            if (g.edges[e].src == static_cast<int>(v)) {
                any = true;
                mx = std::max(mx, lens[e]);
            }
        if (!any) rep.vertices_without_outgoing.push_back(static_cast<int>(v));
        rep.delta += mx;
    }
    rep.crit_not_diagonalizable =
        rep.num_vertices * (rep.delta - 1) + rep.num_edges < rep.ell_total;
    rep.crit_multiple_roots = rep.delta + rep.num_edges - rep.num_vertices < rep.ell_total;

    DirectedGraph gs = subdivide(g, lens);
    IntMatrix a = edge_adjacency(gs);
    RationalPoly xi = char_poly(a);
    rep.zero_alg_mult = static_cast<long long>(xi.ord0());
    rep.zero_geo_mult = static_cast<long long>(a.size()) - rank_rational(a);
    rep.zero_geo_bound = rep.num_edges - rep.num_vertices;

    RationalPoly sf(std::vector<Rational>{Rational(1)});
    for (const auto& f : squarefree_decomposition(xi))
        if (f.degree() >= 1) sf = sf * f;
    rep.has_multiple_roots = sf.degree() < xi.degree();
    rep.diagonalizable = annihilates(sf, a);
    return rep;
}

}  // namespace polyexp
