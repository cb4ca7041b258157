#include <benchmark/benchmark.h>

#include "hwp/assembly.hpp"
#include "hwp/certificate.hpp"
#include "hwp/exact_cover.hpp"
#include "hwp/factor.hpp"
#include "hwp/pattern_solver.hpp"

using namespace hwp;

namespace {

// No cache directory, so every iteration runs the searches cold.
void BM_Generate(benchmark::State& state) {
  const int m = int(state.range(0));
  const int r = int(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(generate(m, r));
}
BENCHMARK(BM_Generate)->Args({9, 7})->Args({9, 17})->Args({9, 23})->Args({15, 17})->Unit(benchmark::kMillisecond);

void BM_SolveRowMonotone(benchmark::State& state) {
  const int m = int(state.range(0));
  const auto S = DifferenceMultiset::symmetric(16, {1, 2, 3, 5, 6, 7}, true);
  for (auto _ : state) benchmark::DoNotOptimize(solve_row_monotone(m, S));
}
BENCHMARK(BM_SolveRowMonotone)->Arg(9)->Arg(15)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_ExactCoverDlx(benchmark::State& state) {
  const auto host = build_host(HostDescriptor::cayley(9, 4, {0, 1, 3}));
  for (auto _ : state) benchmark::DoNotOptimize(exact_cover_fallback(host, Grid(9, 4), 9, 3));
}
BENCHMARK(BM_ExactCoverDlx)->Unit(benchmark::kMillisecond);

void BM_ExactCoverDfs(benchmark::State& state) {
  const auto host = build_host(HostDescriptor::blown(4, 4));
  ExactCoverOptions dfs;
  dfs.cycle_cap = 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_cover_fallback(host, Grid(4, 4), 16, 4, dfs));
}
BENCHMARK(BM_ExactCoverDfs)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
  const Decomposition d = generate(int(state.range(0)), 17);
  for (auto _ : state) benchmark::DoNotOptimize(verify_decomposition(d));
}
BENCHMARK(BM_Verify)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_ParseCertificate(benchmark::State& state) {
  const std::string text = serialize_certificate(generate(9, 17));
  for (auto _ : state) benchmark::DoNotOptimize(parse_certificate(text));
}
BENCHMARK(BM_ParseCertificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
