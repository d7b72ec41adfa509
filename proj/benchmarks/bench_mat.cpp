#include <benchmark/benchmark.h>

#include "cihomol/mat.hpp"
#include "cihomol/prng.hpp"

using namespace cihomol;

namespace {

Mat random_mat(std::size_t n, std::uint64_t p, std::uint64_t seed) {
    Prng rng(seed);
    Mat m(Fp(p), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng.below(p));
    return m;
}

} // namespace

static void BM_rref(benchmark::State& state) {
    Mat m = random_mat(static_cast<std::size_t>(state.range(0)), 5, 17);
    for (auto _ : state) {
        RrefResult r = rref(m);
        benchmark::DoNotOptimize(r.rank);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_rref)->RangeMultiplier(2)->Range(16, 256)->Complexity();

static void BM_kernel_basis(benchmark::State& state) {
    Mat m = random_mat(static_cast<std::size_t>(state.range(0)), 5, 19);
    for (auto _ : state) {
        Mat k = kernel_basis(m);
        benchmark::DoNotOptimize(k.rows());
    }
}
BENCHMARK(BM_kernel_basis)->RangeMultiplier(2)->Range(16, 256);

static void BM_mat_mul(benchmark::State& state) {
    Mat a = random_mat(static_cast<std::size_t>(state.range(0)), 5, 23);
    Mat b = random_mat(static_cast<std::size_t>(state.range(0)), 5, 29);
    for (auto _ : state) {
        Mat c = a * b;
        benchmark::DoNotOptimize(c.entries().data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mat_mul)->RangeMultiplier(2)->Range(16, 256)->Complexity();

BENCHMARK_MAIN();
