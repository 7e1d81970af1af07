#include <benchmark/benchmark.h>

#include <vector>

#include "binpack/adaptive.hpp"
#include "binpack/classic.hpp"
#include "binpack/hybrid.hpp"
#include "binpack/profile.hpp"
#include "binpack/workload.hpp"

namespace {

constexpr int kCapacity = 100;
constexpr int kProfileSize = 5000;

const std::vector<int>& weibull_stream(long long n) {
    static std::vector<int> cache;
    static long long cached_n = -1;
    if (cached_n != n) {
        binpack::SequenceSpec spec;
        spec.mode = binpack::SequenceMode::FixedWeibull;
        spec.n = n;
        spec.k = kCapacity;
        spec.seed = 12345;
        cache = binpack::make_sequence(spec).items;
        cached_n = n;
    }
    return cache;
}

void BM_FirstFit(benchmark::State& state) {
    const auto& seq = weibull_stream(state.range(0));
    for (auto _ : state) {
        auto packing = binpack::first_fit(seq, kCapacity);
        benchmark::DoNotOptimize(packing.bins.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FirstFit)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_BestFit(benchmark::State& state) {
    const auto& seq = weibull_stream(state.range(0));
    for (auto _ : state) {
        auto packing = binpack::best_fit(seq, kCapacity);
        benchmark::DoNotOptimize(packing.bins.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BestFit)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_ProfilePacking(benchmark::State& state) {
    const auto& seq = weibull_stream(state.range(0));
    auto f = binpack::frequencies(seq, kCapacity);
    for (auto _ : state) {
        auto packing = binpack::profile_packing(seq, f, kProfileSize, kCapacity);
        benchmark::DoNotOptimize(packing.bins.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ProfilePacking)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_Hybrid(benchmark::State& state) {
    const auto& seq = weibull_stream(1000000);
    auto pred = binpack::prefix_prediction(seq, 1000, kCapacity);
    binpack::LambdaRatio lambda{state.range(0), 4};
    for (auto _ : state) {
        auto packing = binpack::hybrid(seq, pred.f_pred, lambda, kProfileSize, kCapacity);
        benchmark::DoNotOptimize(packing.bins.data());
    }
    state.SetItemsProcessed(state.iterations() * 1000000);
}
BENCHMARK(BM_Hybrid)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Adaptive(benchmark::State& state) {
    binpack::SequenceSpec spec;
    spec.mode = binpack::SequenceMode::EvolvingWeibull;
    spec.n = state.range(0);
    spec.k = kCapacity;
    spec.seed = 777;
    auto seq = binpack::make_sequence(spec).items;
    for (auto _ : state) {
        auto packing = binpack::adaptive(seq, 5000, kProfileSize, kCapacity);
        benchmark::DoNotOptimize(packing.bins.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Adaptive)->Arg(200000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
