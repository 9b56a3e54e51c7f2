#include <benchmark/benchmark.h>

#include "polyexp/continuation.hpp"
#include "polyexp/fixtures.hpp"
#include "polyexp/graph.hpp"
#include "polyexp/rational_oracle.hpp"
#include "polyexp/zero_finder.hpp"

using namespace polyexp;

static void BM_SpectrumClasses(benchmark::State& state) {
    PolyExponential q = fixtures::example1_poly();
    ParamPoint ell = fixtures::example1_ell_prime();
    for (auto _ : state) benchmark::DoNotOptimize(spectrum_classes(q, ell));
}
BENCHMARK(BM_SpectrumClasses);

static void BM_ZerosInBand(benchmark::State& state) {
    ConcretePolyExp qc = fixtures::example1_poly().instantiate(fixtures::example1_ell());
    for (auto _ : state) benchmark::DoNotOptimize(zeros_in_band(qc, 3.2));
}
BENCHMARK(BM_ZerosInBand);

static void BM_TrackAll(benchmark::State& state) {
    PolyExponential q = fixtures::example1_poly();
    ParamPath path = fixtures::example1_vpath();
    for (auto _ : state) benchmark::DoNotOptimize(track_all(q, path, 3.2));
}
BENCHMARK(BM_TrackAll);

static void BM_PerronPoly(benchmark::State& state) {
    GraphInput gi = fixtures::example1_graph();
    for (auto _ : state) benchmark::DoNotOptimize(perron_poly(gi.graph, gi.lens));
}
BENCHMARK(BM_PerronPoly);

static void BM_CharPolyDirect(benchmark::State& state) {
    GraphInput gi = fixtures::example1_graph();
    DirectedGraph gs = subdivide(gi.graph, {4, 4, 4, 5, 5, 5, 6, 6});
    for (auto _ : state) benchmark::DoNotOptimize(char_poly_direct(gs));
}
BENCHMARK(BM_CharPolyDirect);

BENCHMARK_MAIN();
