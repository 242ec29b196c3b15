#include <benchmark/benchmark.h>

#include "swapsensus/oracle.hpp"

using namespace swapsensus;

namespace {

OracleQuery planted_query(std::size_t n, Metric m)
{
    const auto p = gen_planted(42, n, 4, 4, 2);
    return OracleQuery{p.instance, m, Objective::sum, std::nullopt, std::nullopt, std::nullopt,
                       std::uint64_t{1} << 30};
}

void BM_OracleSerial(benchmark::State& state)
{
    const auto q = planted_query(static_cast<std::size_t>(state.range(0)), Metric::swap_hamming);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_serial(q));
}

void BM_OracleParallel(benchmark::State& state)
{
    const auto q = planted_query(static_cast<std::size_t>(state.range(0)), Metric::swap_hamming);
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force(q));
}

} // namespace

BENCHMARK(BM_OracleSerial)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleParallel)->DenseRange(6, 9, 1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
