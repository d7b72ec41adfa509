#include <benchmark/benchmark.h>

#include "cihomol/cache.hpp"
#include "cihomol/construct.hpp"
#include "cihomol/homalg.hpp"

using namespace cihomol;

static void BM_resolve_residue_field(benchmark::State& state) {
    Ring ring(Fp(5), {2, 2});
    Module k = residue_field(ring);
    std::size_t deg = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        Resolution r = resolve(k, deg);
        benchmark::DoNotOptimize(r.betti().back());
    }
}
BENCHMARK(BM_resolve_residue_field)->DenseRange(4, 10, 2);

static void BM_resolve_h_family(benchmark::State& state) {
    Ring ring(Fp(5), {2, 4});
    Module h = quotient_by_form_power(ring, LinearForm::variable(ring, 1), 1);
    for (auto _ : state) {
        Resolution r = resolve(h, 8);
        benchmark::DoNotOptimize(r.betti().back());
    }
}
BENCHMARK(BM_resolve_h_family);

static void BM_tor(benchmark::State& state) {
    Ring ring(Fp(5), {3, 4});
    Module m = quotient_by_form_power(ring, LinearForm::variable(ring, 0), 1);
    Module n = quotient_by_form_power(ring, LinearForm::variable(ring, 1), 1);
    for (auto _ : state) {
        Module t = tor(m, n, 2, 3);
        benchmark::DoNotOptimize(t.dim());
    }
}
BENCHMARK(BM_tor);

static void BM_iso_test(benchmark::State& state) {
    Ring ring(Fp(5), {2, 4});
    Module h1 = quotient_by_form_power(ring, LinearForm::variable(ring, 1), 1);
    Module o = syzygy(h1);
    Module h3 = quotient_by_form_power(ring, LinearForm::variable(ring, 1), 3);
    for (auto _ : state) {
        IsoResult r = iso_test(o, h3, 16, 0);
        benchmark::DoNotOptimize(r.verdict);
    }
}
BENCHMARK(BM_iso_test);

static void BM_classify_complexity(benchmark::State& state) {
    Ring ring(Fp(5), {5, 5});
    Module h = quotient_by_form_power(ring, LinearForm::variable(ring, 1), 2);
    for (auto _ : state) {
        ComplexityVerdict v = classify_complexity(h, 8, 16, 0);
        benchmark::DoNotOptimize(v.kind);
    }
}
BENCHMARK(BM_classify_complexity);

static void BM_cx1_family(benchmark::State& state) {
    Ring ring(Fp(5), {5, 5});
    for (auto _ : state) {
        Cache cache;
        auto fam = cx1_family(ring, FamilySpec{}, static_cast<std::size_t>(state.range(0)),
                              0, 8, 24, &cache);
        benchmark::DoNotOptimize(fam.size());
    }
}
BENCHMARK(BM_cx1_family)->Arg(10)->Arg(25)->Arg(50);

BENCHMARK_MAIN();
