#include <benchmark/benchmark.h>

#include "congest/detect.hpp"
#include "congest/generators.hpp"
#include "congest/sparse_enum.hpp"

using namespace congest;

static void BM_DetectPaths(benchmark::State& state) {
    Graph g = gnp(50, 0.15, 9);
    SimConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_paths(g, static_cast<int>(state.range(0)), cfg).any_found);
    }
}
BENCHMARK(BM_DetectPaths)->Arg(3)->Arg(5);

static void BM_DetectCycles(benchmark::State& state) {
    Graph g = gnp(30, 0.12, 5);
    SimConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(detect_cycles(g, 5, cfg).any_found);
    }
}
BENCHMARK(BM_DetectCycles);

static void BM_EnumerateCliques(benchmark::State& state) {
    Graph g = random_d_degenerate(static_cast<std::size_t>(state.range(0)), 4, 13);
    SimConfig cfg;
    EnumOptions opts;
    opts.d = 4;
    opts.k = 3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(enumerate_cliques(g, opts, cfg).copies.copies.size());
    }
}
BENCHMARK(BM_EnumerateCliques)->Arg(100)->Arg(300);

static void BM_DistributedOrientation(benchmark::State& state) {
    Graph g = random_d_degenerate(500, 6, 21);
    SimConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(distributed_orientation(g, 6, 3.0, cfg).orientation.max_outdegree());
    }
}
BENCHMARK(BM_DistributedOrientation);

BENCHMARK_MAIN();
