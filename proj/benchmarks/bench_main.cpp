#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "minrank/catalog.hpp"
#include "minrank/clique_cover.hpp"
#include "minrank/minors.hpp"
#include "minrank/rational_matrix.hpp"
#include "minrank/zero_forcing.hpp"

using namespace minrank;

namespace {

std::string data_path(const std::string& name) { return std::string(MINRANK_DATA_DIR) + "/" + name; }

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution edge(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (edge(rng)) g.add_edge(u, v);
    return g;
}

void BM_ZeroForcing(benchmark::State& state) {
    std::mt19937 rng(1);
    const Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.25);
    for (auto _ : state) benchmark::DoNotOptimize(zero_forcing_number(g));
}
BENCHMARK(BM_ZeroForcing)->Arg(16)->Arg(20)->Arg(24);

void BM_CliqueCover(benchmark::State& state) {
    std::mt19937 rng(2);
    const Graph g = random_graph(rng, static_cast<int>(state.range(0)), 0.5);
    for (auto _ : state) benchmark::DoNotOptimize(clique_cover_number(g));
}
BENCHMARK(BM_CliqueCover)->Arg(10)->Arg(14)->Arg(18);

void BM_Planarity(benchmark::State& state) {
    const auto atlas = load_atlas(data_path("atlas.g6"));
    for (auto _ : state) {
        int count = 0;
        for (const auto& e : atlas) count += is_planar(e.graph) + is_outerplanar(e.graph);
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_Planarity)->Unit(benchmark::kMillisecond);

void BM_WitnessRank(benchmark::State& state) {
    const auto atlas = load_atlas(data_path("atlas.g6"));
    const auto fixtures = load_fixtures(data_path("table1.tsv"));
    const auto witnesses = load_witnesses(data_path("witnesses.txt"), atlas.size(), fixtures);
    for (auto _ : state)
        for (const auto& w : witnesses) benchmark::DoNotOptimize(rank(w.matrix));
}
BENCHMARK(BM_WitnessRank);

void BM_Table(benchmark::State& state) {
    const auto atlas = load_atlas(data_path("atlas.g6"));
    const auto list = load_forbidden_list(data_path("forbidden_mr2.g6"));
    for (auto _ : state) benchmark::DoNotOptimize(compute_all(atlas, list, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Table)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
