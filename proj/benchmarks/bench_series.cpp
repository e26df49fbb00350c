#include <benchmark/benchmark.h>

#include "ghs/asympint.hpp"
#include "ghs/random.hpp"
#include "ghs/session.hpp"

namespace {

ghs::Session session() { return ghs::default_session(); }

void BM_series_multiply(benchmark::State& state) {
    const ghs::Session s = session();
    ghs::RandomGen gen(s.chain.window(-4, 4), 7);
    const ghs::Series a = gen.series(12, true);
    const ghs::Series b = gen.series(12, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_multiply);

void BM_derive(benchmark::State& state) {
    const ghs::Session s = session();
    ghs::RandomGen gen(s.chain.window(-4, 4), 11);
    const ghs::Series a = gen.series(12, true);
    for (auto _ : state)
        benchmark::DoNotOptimize(s.schema.derive(a));
}
BENCHMARK(BM_derive);

void BM_integrate(benchmark::State& state) {
    const ghs::Session s = session();
    const ghs::Series a = ghs::Series::monomial(
        ghs::Monomial::fundamental(ghs::Fundamental(-1)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ghs::integrate(s.schema, a, 6, 32));
}
BENCHMARK(BM_integrate);

} // namespace

BENCHMARK_MAIN();
