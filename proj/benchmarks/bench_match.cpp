#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tmatch/analytics.hpp"
#include "tmatch/engine.hpp"
#include "tmatch/motif.hpp"
#include "tmatch/static_match.hpp"
#include "tmatch/temporal_graph.hpp"

namespace {

using namespace tmatch;

// One tick per edge: the number of edges per delta window stays ~delta at
// every size, so timings isolate the |E_G| factor.
TemporalGraph uniform_rate_graph(std::size_t edges, std::size_t nodes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> node_dist(0, nodes - 1);
    std::vector<EdgeTriple> triples;
    triples.reserve(edges);
    for (std::size_t i = 0; i < edges; ++i)
        triples.push_back({"n" + std::to_string(node_dist(rng)),
                           "n" + std::to_string(node_dist(rng)),
                           static_cast<Timestamp>(i), kNoAttr});
    return build_graph(std::move(triples));
}

const TemporalGraph& shared_graph(std::size_t edges) {
    static const TemporalGraph g10k = uniform_rate_graph(10000, 200, 1);
    static const TemporalGraph g40k = uniform_rate_graph(40000, 800, 1);
    static const TemporalGraph g160k = uniform_rate_graph(160000, 3200, 1);
    if (edges <= 10000) return g10k;
    if (edges <= 40000) return g40k;
    return g160k;
}

void BM_CountMatches_Edges(benchmark::State& state) {
    const auto& g = shared_graph(static_cast<std::size_t>(state.range(0)));
    const MatchQuery q{builtin_motif("m2"), 50, {}, true};
    for (auto _ : state) benchmark::DoNotOptimize(count_matches(g, q));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                            static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_CountMatches_Edges)->Arg(10000)->Arg(40000)->Arg(160000);

void BM_CountMatches_Delta(benchmark::State& state) {
    const auto& g = shared_graph(40000);
    const MatchQuery q{builtin_motif("m2"), state.range(0), {}, true};
    for (auto _ : state) benchmark::DoNotOptimize(count_matches(g, q));
}
BENCHMARK(BM_CountMatches_Delta)->Arg(10)->Arg(100)->Arg(1000);

void BM_CountMatches_Motif(benchmark::State& state) {
    const char* names[] = {"m1", "m2", "m3", "m4", "m5", "m6"};
    const auto& g = shared_graph(40000);
    const MatchQuery q{builtin_motif(names[state.range(0)]), 100, {}, true};
    for (auto _ : state) benchmark::DoNotOptimize(count_matches(g, q));
}
BENCHMARK(BM_CountMatches_Motif)->DenseRange(0, 5);

void BM_CandidateSeek(benchmark::State& state) {
    const auto& g = shared_graph(160000);
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(g.node_count() - 1));
    std::uniform_int_distribution<EdgeIndex> floor(0, static_cast<EdgeIndex>(g.edge_count() - 1));
    for (auto _ : state) {
        auto span = g.candidate_edges(EdgeConstraint::from(node(rng)), floor(rng),
                                      static_cast<Timestamp>(g.edge_count() / 2));
        benchmark::DoNotOptimize(span.size());
    }
}
BENCHMARK(BM_CandidateSeek);

void BM_StaticCount(benchmark::State& state) {
    const auto& g = shared_graph(10000);
    const auto merged = merge_parallel_edges(g);
    const auto motif = builtin_motif("m1");
    for (auto _ : state) benchmark::DoNotOptimize(count_static_matches(merged, motif));
}
BENCHMARK(BM_StaticCount);

void BM_BuildGraph(benchmark::State& state) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> node_dist(0, 799);
    std::vector<EdgeTriple> triples;
    for (std::size_t i = 0; i < 40000; ++i)
        triples.push_back({"n" + std::to_string(node_dist(rng)),
                           "n" + std::to_string(node_dist(rng)),
                           static_cast<Timestamp>(rng() % 40000), kNoAttr});
    for (auto _ : state) {
        auto copy = triples;
        benchmark::DoNotOptimize(build_graph(std::move(copy)));
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * 40000);
}
BENCHMARK(BM_BuildGraph);

void BM_MeanEdgesPerWindow(benchmark::State& state) {
    const auto& g = shared_graph(160000);
    for (auto _ : state) benchmark::DoNotOptimize(mean_edges_per_window(g, 500));
}
BENCHMARK(BM_MeanEdgesPerWindow);

}  // namespace

BENCHMARK_MAIN();
