#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyexp/asymptotics.hpp"
#include "polyexp/continuation.hpp"
#include "polyexp/graph.hpp"
#include "polyexp/poly_exponential.hpp"
#include "polyexp/rational_oracle.hpp"

namespace polyexp {

// --- JSON input ------------------------------------------------------------
// { "a0": number|"p/q", "params": [names],
//   "terms": [ { "coeff": ..., "exponent": { "<param>": "p/q", "const": "p/q" } } ] }
PolyExponential poly_from_json(const std::string& text);
PolyExponential poly_from_file(const std::string& path);
std::string poly_to_json(const PolyExponential& q);

// { "vertices": [names], "edges": [ { "id", "src", "dst", "len": int|"<param>" } ] }
struct GraphInput {
    DirectedGraph graph;
    std::vector<LinearForm> lens;
    bool all_integer = true;
    std::vector<long long> int_lens;  // valid when all_integer
};
GraphInput graph_from_json(const std::string& text);
GraphInput graph_from_file(const std::string& path);

// { "breakpoints": [[...], [...]], "samples": n } (names optional, default l1..lm)
struct PathInput {
    ParamPath path;
    int samples = 0;
};
PathInput path_from_json(const std::string& text, std::vector<std::string> names = {});
PathInput path_from_file(const std::string& path, std::vector<std::string> names = {});

// Automorphism: { "vertices": { name: name }, "edges": { id: id } } or index arrays.
GraphAutomorphism automorphism_from_json(const std::string& text, const DirectedGraph& g);
GraphAutomorphism automorphism_from_file(const std::string& path, const DirectedGraph& g);

// "1,2,inf,4" or a JSON array with "inf" entries.
ExtendedParam extended_param_parse(const std::string& text);

// "1,1,1,1,1,1,2,2" or "1/2,3/4"; exact rationals throughout.
ParamPoint param_point_parse(const std::string& text, std::vector<std::string> names = {});

// --- result serialization --------------------------------------------------
std::string spectrum_to_json(const std::vector<SpectrumClass>& classes);
std::string spectrum_to_csv(const std::vector<SpectrumClass>& classes);
std::string zeros_to_json(const std::vector<LocatedZero>& zeros);
std::string zeros_to_csv(const std::vector<LocatedZero>& zeros);
std::string trajectories_to_json(const std::vector<Trajectory>& trajectories);
std::string trajectories_to_csv(const std::vector<Trajectory>& trajectories);
std::string intervals_to_json(const IntervalSet& s);
std::string boundary_to_json(const BoundarySpectrum& b);
std::string growth_to_json(const GrowthClassification& g);
std::string cor2_to_json(const Cor2Report& r);

std::string read_file(const std::string& path);

// Fixed-format floating point used by every emitter, so identical runs produce
// byte-identical output.
std::string fmt_double(double x);

}  // namespace polyexp
