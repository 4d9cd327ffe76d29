#include "specht/designs.hpp"
#include "specht/hemmer.hpp"
#include "specht/witnesses.hpp"

#include <benchmark/benchmark.h>

using namespace specht;

static void BM_BinomModP(benchmark::State& state) {
    const PrimeP p(7);
    for (auto _ : state) {
        int64_t acc = 0;
        for (int64_t a = 0; a <= 200; ++a)
            acc += binom_mod_p(a, a / 2, p);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_BinomModP);

static void BM_Transform(benchmark::State& state) {
    const GroundSet g(12);
    const BlockVector c = ones(g, 4);
    for (auto _ : state) {
        auto t = transform(c, 2);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Transform);

static void BM_InclusionRank(benchmark::State& state) {
    for (auto _ : state) {
        auto r = inclusion_rank(8, 2, 4);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_InclusionRank);

static void BM_ConstructDesignFano(benchmark::State& state) {
    const DesignParams params = admissible(7, 3, 2, 7);
    for (auto _ : state) {
        auto c = construct_design(params);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ConstructDesignFano);

static void BM_MainWitness(benchmark::State& state) {
    const PrimeP p(3);
    for (auto _ : state) {
        auto w = main_u(5, 3, p);
        benchmark::DoNotOptimize(w);
    }
}
BENCHMARK(BM_MainWitness);

static void BM_StackedNullity(benchmark::State& state) {
    const Composition lambda({3, 2, 1});
    for (auto _ : state) {
        auto n = stacked_psi_nullity(lambda);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_StackedNullity);

BENCHMARK_MAIN();
