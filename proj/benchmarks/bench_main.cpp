#include <benchmark/benchmark.h>

#include "hyperchar/characteristic.hpp"
#include "hyperchar/hyperfield.hpp"
#include "hyperchar/norm_criterion.hpp"
#include "hyperchar/numerical_monoid.hpp"

using namespace hyperchar;

namespace {

// (p, n) pairs with n | p - 1.
const std::vector<std::pair<u64, u64>> kCases{{199, 11}, {1009, 9}, {3001, 8}, {10007, 2}};

void BM_CharacteristicDp(benchmark::State& state) {
    const auto [p, n] = kCases[state.range(0)];
    for (auto _ : state) benchmark::DoNotOptimize(generating_set_dp(Prime(p), n));
    state.SetLabel("p=" + std::to_string(p) + " n=" + std::to_string(n));
}
BENCHMARK(BM_CharacteristicDp)->DenseRange(0, 3);

void BM_HyperaddAllPairs(benchmark::State& state) {
    const auto h = build_quotient(Prime(state.range(0)), 3);
    const auto& cls = h.classes();
    for (auto _ : state) {
        for (auto x : cls) {
            for (auto y : cls) benchmark::DoNotOptimize(hyperadd(h, x, y));
        }
    }
    state.SetItemsProcessed(state.iterations() * cls.size() * cls.size());
}
BENCHMARK(BM_HyperaddAllPairs)->Arg(31)->Arg(103)->Arg(307);

void BM_NormCandidates(benchmark::State& state) {
    const Prime p(state.range(0)), q(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(candidate_sums(p, q));
}
BENCHMARK(BM_NormCandidates)->Args({199, 11})->Args({1231, 5})->Args({2053, 19})->Args({4019, 7});

void BM_MinimizeGenerators(benchmark::State& state) {
    std::vector<u64> gens;
    for (u64 g = state.range(0); g < 2 * static_cast<u64>(state.range(0)); ++g) gens.push_back(g);
    for (auto _ : state) benchmark::DoNotOptimize(minimize_generators(gens));
}
BENCHMARK(BM_MinimizeGenerators)->Arg(50)->Arg(400)->Arg(2000);

}  // namespace

BENCHMARK_MAIN();
