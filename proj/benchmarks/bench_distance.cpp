#include <benchmark/benchmark.h>

#include "stabkit/generate.hpp"

using namespace stabkit;

static void BM_DistanceFiveQubit(benchmark::State& state) {
    const StabilizerCode code = catalog("five_one_three");
    for (auto _ : state) {
        Distance d = distance(code);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_DistanceFiveQubit);

static void BM_DistanceSteane(benchmark::State& state) {
    const StabilizerCode code = catalog("steane");
    for (auto _ : state) {
        Distance d = distance(code);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_DistanceSteane);

static void BM_DistanceShor(benchmark::State& state) {
    const StabilizerCode code = catalog("shor");
    for (auto _ : state) {
        Distance d = distance(code);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_DistanceShor);

// Weight-3 exhaustion on codes with no low-weight logicals: dominated by
// the syndrome accumulation loop.
static void BM_DistanceLowerBound(benchmark::State& state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    const StabilizerCode code = random_code({Prime(2), n, 1, 31});
    for (auto _ : state) {
        try {
            Distance d = distance(code, {3});
            benchmark::DoNotOptimize(d.value);
        } catch (const ResourceLimitError& e) {
            benchmark::DoNotOptimize(e.lower_bound());
        }
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_DistanceLowerBound)->RangeMultiplier(2)->Range(16, 64)->Complexity();

static void BM_DistanceQutrit(benchmark::State& state) {
    const StabilizerCode code = random_code({Prime(3), 8, 2, 17});
    for (auto _ : state) {
        Distance d = distance(code);
        benchmark::DoNotOptimize(d.value);
    }
}
BENCHMARK(BM_DistanceQutrit);

static void BM_RandomCode(benchmark::State& state) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        StabilizerCode code = random_code({Prime(2), n, n / 2, seed++});
        benchmark::DoNotOptimize(code.k());
    }
}
BENCHMARK(BM_RandomCode)->RangeMultiplier(2)->Range(8, 64);

static void BM_CleaningSweep(benchmark::State& state) {
    const StabilizerCode code = random_code({Prime(2), 8, 2, 23});
    for (auto _ : state) {
        std::size_t acc = 0;
        for (std::uint64_t mask = 0; mask < (1u << 8); ++mask) {
            std::vector<std::uint32_t> idx;
            for (std::uint32_t i = 0; i < 8; ++i) {
                if (mask >> i & 1) idx.push_back(i);
            }
            acc += check_cleaning_identity(code, QubitSet(8, std::move(idx))).g_m;
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_CleaningSweep);

BENCHMARK_MAIN();
