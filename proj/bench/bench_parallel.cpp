// Serial reference runners against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "isolab/batch.hpp"
#include "isolab/invariants.hpp"
#include "isolab/sampling.hpp"
#include "isolab/spectral.hpp"

using namespace isolab;

namespace {

batch::SampleOutcome rank3_oracle_sample(std::mt19937_64& rng, std::size_t) {
  const spectral::BaseSL4 b{sampling::zpoly(rng, 4), sampling::zpoly(rng, 4), sampling::zpoly(rng, 4)};
  if (spectral::so6_base(b).sextic() == spectral::so6_oracle(b)) return std::nullopt;
  return std::string("mismatch");
}

void BM_OracleBatchSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(batch::run_serial(n, 7, rank3_oracle_sample));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OracleBatchParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(batch::run_parallel(n, 7, rank3_oracle_sample));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_TwoTorsionSerial(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants::count_two_torsion_serial(g));
}

void BM_TwoTorsionParallel(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants::count_two_torsion_parallel(g));
}

void BM_SquareRootsSerial(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants::count_square_roots_serial(g));
}

void BM_SquareRootsParallel(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(invariants::count_square_roots_parallel(g));
}

} // namespace

BENCHMARK(BM_OracleBatchSerial)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OracleBatchParallel)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TwoTorsionSerial)->DenseRange(2, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_TwoTorsionParallel)->DenseRange(2, 3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SquareRootsSerial)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SquareRootsParallel)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
