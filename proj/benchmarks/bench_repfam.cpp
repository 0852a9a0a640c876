#include <benchmark/benchmark.h>

#include "congest/generators.hpp"
#include "congest/repfam.hpp"

using namespace congest;

namespace {

SetFamily random_family(std::size_t members, std::size_t set_size, std::size_t universe,
                        std::uint64_t seed) {
    SplitMix64 rng(seed);
    SetFamily f;
    for (std::size_t i = 0; i < members; ++i) {
        Member m;
        while (m.size() < set_size) {
            NodeId x = rng.next_below(universe);
            if (std::find(m.begin(), m.end(), x) == m.end()) m.push_back(x);
        }
        f.add(std::move(m));
    }
    return f;
}

}  // namespace

static void BM_Minimize(benchmark::State& state) {
    SetFamily f = random_family(static_cast<std::size_t>(state.range(0)), 4, 30, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize(f, 3).size());
    }
}
BENCHMARK(BM_Minimize)->Arg(50)->Arg(200)->Arg(800);

static void BM_RepresentativeCheck(benchmark::State& state) {
    SetFamily f = random_family(60, 3, 12, 3);
    SetFamily sub = minimize(f, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(is_q_representative(sub, f, 3));
    }
}
BENCHMARK(BM_RepresentativeCheck);
