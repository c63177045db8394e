#include <benchmark/benchmark.h>

#include "stabkit/generate.hpp"
#include "stabkit/pauli.hpp"

using namespace stabkit;

namespace {

MatrixFp random_matrix(std::uint64_t seed, Prime p, std::size_t rows, std::size_t cols) {
    SplitMix64 rng(seed);
    MatrixFp m(p, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m.set(r, c, static_cast<std::uint32_t>(rng.below(p.value())));
        }
    }
    return m;
}

}  // namespace

static void BM_RrefGF2Bitpacked(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const MatrixFp m = random_matrix(1, Prime(2), n, 2 * n);
    for (auto _ : state) {
        RrefResult r = rref(m, Backend::Bitpacked);
        benchmark::DoNotOptimize(r.rank);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_RrefGF2Bitpacked)->RangeMultiplier(2)->Range(32, 512)->Complexity();

static void BM_RrefGF2Generic(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const MatrixFp m = random_matrix(1, Prime(2), n, 2 * n);
    for (auto _ : state) {
        RrefResult r = rref(m, Backend::Generic);
        benchmark::DoNotOptimize(r.rank);
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_RrefGF2Generic)->RangeMultiplier(2)->Range(32, 512)->Complexity();

static void BM_RrefF5(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const MatrixFp m = random_matrix(2, Prime(5), n, 2 * n);
    for (auto _ : state) {
        RrefResult r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
}
BENCHMARK(BM_RrefF5)->RangeMultiplier(2)->Range(16, 256);

static void BM_SubspaceIntersect(benchmark::State& state) {
    const std::size_t ambient = state.range(0);
    const Subspace a = Subspace::from_rows(random_matrix(3, Prime(2), ambient / 2, ambient));
    const Subspace b = Subspace::from_rows(random_matrix(4, Prime(2), ambient / 2, ambient));
    for (auto _ : state) {
        Subspace inter = subspace_intersect(a, b);
        benchmark::DoNotOptimize(inter.dim());
    }
}
BENCHMARK(BM_SubspaceIntersect)->RangeMultiplier(2)->Range(16, 256);

static void BM_SymOrth(benchmark::State& state) {
    const std::size_t n = state.range(0);
    const StabilizerCode code = random_code({Prime(2), static_cast<std::uint32_t>(n),
                                             static_cast<std::uint32_t>(n / 4), 5});
    for (auto _ : state) {
        Subspace sp = sym_orth(code.stabilizer());
        benchmark::DoNotOptimize(sp.dim());
    }
}
BENCHMARK(BM_SymOrth)->RangeMultiplier(2)->Range(16, 128);

BENCHMARK_MAIN();
