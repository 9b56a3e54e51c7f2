#pragma once

#include <string>
#include <vector>

#include "polyexp/continuation.hpp"
#include "polyexp/json_io.hpp"
#include "polyexp/poly_exponential.hpp"

namespace polyexp::fixtures {

std::vector<std::string> list();

// --- example1: two vertices, 3 + 3 parallel edges and a loop at each --------
GraphInput example1_graph();
PolyExponential example1_poly();          // Perron polynomial, t^x -> e^{xw}
ParamPoint example1_ell();                // (1,1,1,1,1,1,2,2)
ParamPoint example1_ell_prime();          // (4,4,4,5,5,5,6,6)
ParamPath example1_vpath();               // straight line ell -> ell' inside V

// --- example2-teichmuller: the 4-parameter (a,b,c,u) polynomial -------------
PolyExponential example2_poly();
ParamPoint example2_gamma(const Rational& x);  // γ(x) = (−1,3,1,3) − x(−1,4,5,0)
ParamPath example2_gamma_path(const Rational& x_hi, const Rational& x_lo);

// --- theorem2-family: Q = −1 + Σ e^{ℓᵢ w} -----------------------------------
PolyExponential theorem2_family(size_t m);

// --- example3: quotient-polynomial shape (parse/evaluate only) --------------
PolyExponential example3_quotient();

// Fixture file bodies by name ("example1", "example1-graph", ...).
std::string fixture_json(const std::string& name);
std::vector<std::string> fixture_file_names();

}  // namespace polyexp::fixtures
