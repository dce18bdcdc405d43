// Serial reference vs OpenMP kernels: exhaustive search and multi-seed runs.
#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "tspga/brute_force.hpp"
#include "tspga/city.hpp"
#include "tspga/multi_run.hpp"

namespace {

tspga::CityList cities(std::size_t n) { return tspga::load_cities(TSPGA_CITIES).prefix(n); }

void BM_BruteForceSerial(benchmark::State& state) {
    const auto c = cities(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tspga::brute_force_optimum_serial(c));
}

void BM_BruteForceParallel(benchmark::State& state) {
    const auto c = cities(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tspga::brute_force_optimum(c));
}

std::vector<std::uint64_t> seeds(std::int64_t count) {
    std::vector<std::uint64_t> s(static_cast<std::size_t>(count));
    std::iota(s.begin(), s.end(), std::uint64_t{0});
    return s;
}

void BM_RunSeedsSerial(benchmark::State& state) {
    const auto c = cities(10);
    const auto s = seeds(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tspga::run_seeds_serial(c, {}, s));
}

void BM_RunSeedsParallel(benchmark::State& state) {
    const auto c = cities(10);
    const auto s = seeds(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(tspga::run_seeds(c, {}, s));
}

}  // namespace

BENCHMARK(BM_BruteForceSerial)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForceParallel)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunSeedsSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunSeedsParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
