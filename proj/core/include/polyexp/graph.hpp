#pragma once

#include <string>
#include <vector>

#include "polyexp/exponent_poly.hpp"

namespace polyexp {

// Finite directed multigraph; loops and parallel edges allowed.
struct DirectedGraph {
    struct Edge {
        std::string id;
        int src, dst;
    };
    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    int vertex_index(const std::string& name) const;
    void validate() const;
};

using IntMatrix = std::vector<std::vector<Int>>;

// Γ_ℓ: each edge replaced by a directed path of ℓ(e) edges.
DirectedGraph subdivide(const DirectedGraph& g, const std::vector<long long>& lens);

IntMatrix adjacency(const DirectedGraph& g);

// Edge-transition matrix: B_{ef} = 1 when the head of e is the tail of f.
// A_ℓ is this matrix for Γ_ℓ, so deg ξ_ℓ = #E(Γ_ℓ) = |ℓ|; its nonzero
// spectrum coincides with the vertex adjacency spectrum.
IntMatrix edge_adjacency(const DirectedGraph& g);

// Exact characteristic polynomial det(tI − A), division-free (Berkowitz).
RationalPoly char_poly(const IntMatrix& a);
// ξ of a graph: char poly of its edge-transition matrix.
RationalPoly char_poly_direct(const DirectedGraph& g);

// P(t, ℓ) = det(I − A(t,ℓ)) with A_{uv} = Σ_{[e]=(u,v)} t^{ℓ(e)}.
ExponentPolynomial perron_poly(const DirectedGraph& g, const std::vector<LinearForm>& lens);
// Integer lengths as constant forms.
ExponentPolynomial perron_poly(const DirectedGraph& g, const std::vector<long long>& lens);

struct Cycle {
    std::vector<int> edge_ids;  // indices into g.edges
    unsigned long long vertex_mask;
    long long length;
};

std::vector<Cycle> simple_cycles(const DirectedGraph& g, const std::vector<long long>& lens,
                                 size_t budget = 20000);

// Cvetković–Rowlinson: ξ_ℓ = t^{|ℓ|}(1 + Σ_{multi-cycles σ} (−1)^{n(σ)} t^{−|σ|}).
RationalPoly char_poly_multicycle(const DirectedGraph& g, const std::vector<long long>& lens,
                                  size_t budget = 20000);

struct Prop4Report {
    RationalPoly xi;         // char poly of A_ℓ
    RationalPoly p_spec;     // Perron polynomial specialized at ℓ
    bool identity_exact;     // ξ(t) == t^{|ℓ|} P(1/t)
    double hausdorff;        // between nonzero eigenvalues and inverse P-zeros
    bool eigen_match;
    bool pass() const { return identity_exact && eigen_match; }
};
Prop4Report prop4_check(const DirectedGraph& g, const std::vector<long long>& lens,
                        double tol = 1e-8);

struct GraphAutomorphism {
    std::vector<int> vperm;  // vertex i -> vperm[i]
    std::vector<int> eperm;  // edge i -> eperm[i]
};

// Prop 5 quotient polynomial P_{T,λ₀} = det(I − D) over orbit representatives.
// λ₀ ∈ {+1, −1} (the only real roots of unity; complex λ₀ is out of scope).
ExponentPolynomial quotient_poly(const DirectedGraph& g, const std::vector<LinearForm>& lens,
                                 const GraphAutomorphism& t, int lambda0);
ExponentPolynomial quotient_poly(const DirectedGraph& g, const std::vector<long long>& lens,
                                 const GraphAutomorphism& t, int lambda0);

struct Cor2Report {
    long long delta = 0;      // δ(ℓ) = Σ_v max outgoing ℓ(e)
    long long ell_total = 0;  // |ℓ|
    long long num_vertices = 0, num_edges = 0;
    bool crit_not_diagonalizable = false;  // #V(δ−1)+#E < |ℓ|
    bool crit_multiple_roots = false;      // δ+#E−#V < |ℓ|
    bool diagonalizable = true;            // exact: s(A_ℓ) = 0 for squarefree part s
    bool has_multiple_roots = false;       // exact: deg gcd(ξ, ξ') > 0
    long long zero_alg_mult = 0;
    long long zero_geo_mult = 0;
    long long zero_geo_bound = 0;  // #E(Γ) − #V(Γ)
    std::vector<int> vertices_without_outgoing;
};
Cor2Report cor2_audit(const DirectedGraph& g, const std::vector<long long>& lens);

}  // namespace polyexp
