#include <benchmark/benchmark.h>

#include "wildmass/masses.hpp"
#include "wildmass/padic/etale.hpp"
#include "wildmass/partitions.hpp"

using namespace wildmass;

static void BM_PartitionEnumeration(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_partitions(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PartitionEnumeration)->Arg(10)->Arg(20)->Arg(30);

static void BM_PartitionsIntoParts(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(hilbert_origin_count(n));
}
BENCHMARK(BM_PartitionsIntoParts)->Arg(20)->Arg(100);

static void BM_TameMassSymmetric(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    auto sigma = defining_rep(GroupModel::symmetric(n));
    auto doubled = direct_sum(sigma, sigma);
    for (auto _ : state)
        benchmark::DoNotOptimize(tame_mass(doubled, {Counting::weight, +1}, 1));
}
BENCHMARK(BM_TameMassSymmetric)->Arg(5)->Arg(8)->Arg(12);

static void BM_EnumerateExtensions(benchmark::State& state)
{
    long p = state.range(0);
    int e = static_cast<int>(state.range(1));
    padic::EnumerationOptions opts;
    opts.threads = 1;
    for (auto _ : state)
        benchmark::DoNotOptimize(padic::enumerate_extensions(p, 1, e, opts));
}
BENCHMARK(BM_EnumerateExtensions)->Args({2, 2})->Args({3, 2})->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

static void BM_EtaleAlgebras(benchmark::State& state)
{
    long p = state.range(0);
    int n = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(padic::enumerate_etale_algebras(p, n));
}
BENCHMARK(BM_EtaleAlgebras)->Args({2, 3})->Args({3, 3})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
