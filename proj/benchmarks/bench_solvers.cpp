#include <benchmark/benchmark.h>

#include "exgraph/clique.hpp"
#include "exgraph/graph_iso.hpp"
#include "exgraph/invariants.hpp"
#include "exgraph/theta.hpp"

using namespace exgraph;

namespace {

void BM_MaxCliqueOrSquareM4(benchmark::State& state) {
    const Graph g = or_power(Graph::circulant(8, {1, 4}), 2);
    for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).size);
}
BENCHMARK(BM_MaxCliqueOrSquareM4);

void BM_MaxCliqueOrSquareCi13(benchmark::State& state) {
    const Graph g = or_power(Graph::circulant(13, {1, 2, 6}), 2);
    for (auto _ : state) benchmark::DoNotOptimize(max_clique(g).size);
}
BENCHMARK(BM_MaxCliqueOrSquareCi13);

void BM_IndependenceStrongSquareCi812(benchmark::State& state) {
    const Graph g = strong_power(Graph::circulant(8, {1, 2}), 2);
    for (auto _ : state) benchmark::DoNotOptimize(max_independent_set(g).size);
}
BENCHMARK(BM_IndependenceStrongSquareCi812);

void BM_ThetaC5(benchmark::State& state) {
    const Graph g = Graph::cycle(5);
    for (auto _ : state) benchmark::DoNotOptimize(sdp_theta(g).value);
}
BENCHMARK(BM_ThetaC5);

void BM_ThetaPentagonOrSquare(benchmark::State& state) {
    const Graph g = or_power(Graph::cycle(5), 2);
    for (auto _ : state) benchmark::DoNotOptimize(sdp_theta(g).value);
}
BENCHMARK(BM_ThetaPentagonOrSquare);

void BM_PackingLpPentagonOrSquare(benchmark::State& state) {
    const Graph g = or_power(Graph::cycle(5), 2);
    SolveOptions options;
    options.use_cache = false;
    for (auto _ : state) benchmark::DoNotOptimize(alpha_star(g, options));
}
BENCHMARK(BM_PackingLpPentagonOrSquare);

void BM_MaximalCliquesPentagonOrSquare(benchmark::State& state) {
    const Graph g = or_power(Graph::cycle(5), 2);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximal_cliques(g).size());
}
BENCHMARK(BM_MaximalCliquesPentagonOrSquare);

void BM_InducedPentagonsM4(benchmark::State& state) {
    const Graph g = Graph::circulant(8, {1, 4});
    for (auto _ : state) benchmark::DoNotOptimize(induced_cycles(g, 5).size());
}
BENCHMARK(BM_InducedPentagonsM4);

void BM_IsomorphismPaley13(benchmark::State& state) {
    const Graph a = Graph::circulant(13, {1, 3, 4});
    const Graph b = complement(a);
    for (auto _ : state) benchmark::DoNotOptimize(find_isomorphism(a, b).has_value());
}
BENCHMARK(BM_IsomorphismPaley13);

}  // namespace

int main(int argc, char** argv) {
    benchmark::Initialize(&argc, argv);
    if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
