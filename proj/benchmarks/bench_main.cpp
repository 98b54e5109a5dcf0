#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "zpmono/counting.hpp"
#include "zpmono/field.hpp"
#include "zpmono/set_spec.hpp"
#include "zpmono/transform.hpp"

using namespace zpmono;

namespace {

std::vector<cdouble> random_signal(std::int64_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<cdouble> f(static_cast<std::size_t>(n));
    for (auto& v : f) v = {canonical_double(rng), canonical_double(rng)};
    return f;
}

void bm_forward_naive(benchmark::State& state) {
    const PrimeContext ctx(state.range(0));
    const auto f = random_signal(ctx.order(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(forward(ctx, f));
    }
}
BENCHMARK(bm_forward_naive)->Arg(499)->Arg(2003)->Arg(10007);

void bm_forward_chirp(benchmark::State& state) {
    const PrimeContext ctx(state.range(0));
    const auto f = random_signal(ctx.order(), 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast_forward(ctx, f));
    }
}
BENCHMARK(bm_forward_chirp)->Arg(499)->Arg(2003)->Arg(10007)->Arg(102407);

void bm_sigma(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    const PrimeContext ctx(p);
    const ZpSubset a1 = random_subset(p, 0.5, 1).without_zero();
    const ZpSubset a2 = random_subset(p, 0.5, 2).without_zero();
    for (auto _ : state) {
        benchmark::DoNotOptimize(sigma(ctx, a1, a2, Omega::plus));
    }
}
BENCHMARK(bm_sigma)->Arg(499)->Arg(2003)->Arg(10007);

void bm_quadruple_count(benchmark::State& state) {
    const std::int64_t p = state.range(0);
    const PrimeContext ctx(p);
    const ZpSubset a1 = random_subset(p, 0.3, 3).without_zero();
    for (auto _ : state) {
        benchmark::DoNotOptimize(quadruple_count(ctx, a1, Omega::plus));
    }
}
BENCHMARK(bm_quadruple_count)->Arg(101)->Arg(499);

}  // namespace

BENCHMARK_MAIN();
