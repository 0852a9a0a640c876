#include <benchmark/benchmark.h>

#include "congest/generators.hpp"
#include "congest/graph.hpp"
#include "congest/oracle.hpp"

using namespace congest;

static void BM_Degeneracy(benchmark::State& state) {
    Graph g = gnp(static_cast<std::size_t>(state.range(0)), 0.1, 42);
    for (auto _ : state) {
        benchmark::DoNotOptimize(degeneracy(g).degeneracy);
    }
}
BENCHMARK(BM_Degeneracy)->Arg(50)->Arg(200)->Arg(500);

static void BM_ExactOrientation(benchmark::State& state) {
    Graph g = random_d_degenerate(static_cast<std::size_t>(state.range(0)), 4, 7);
    for (auto _ : state) {
        Orientation o = exact_d_orientation(g);
        benchmark::DoNotOptimize(o.max_outdegree());
    }
}
BENCHMARK(BM_ExactOrientation)->Arg(100)->Arg(500);

static void BM_OracleEnumerateC5(benchmark::State& state) {
    Graph g = petersen_graph();
    Graph c5 = cycle_graph(5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle_enumerate(g, c5).size());
    }
}
BENCHMARK(BM_OracleEnumerateC5);
