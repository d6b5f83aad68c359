#include <benchmark/benchmark.h>
#include <omp.h>

#include "jonq/explore.hpp"

namespace {

const std::vector<jonq::CaseSpec>& grid() {
  static const auto cases = jonq::case_grid(2, 3, 2, 4, 4, 99);
  return cases;
}

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    auto out = jonq::sweep(grid(), jonq::PrimeField::kDefaultModulus, jonq::CheckSet{}, false);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["cases"] = static_cast<double>(grid().size());
}

void BM_SweepParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto out = jonq::sweep(grid(), jonq::PrimeField::kDefaultModulus, jonq::CheckSet{}, true);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["cases"] = static_cast<double>(grid().size());
}

// Rees elimination alone at the largest grid cell
void BM_ReesIdeal(benchmark::State& state) {
  auto j = jonq::random_map(jonq::PrimeField(), 3, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(jonq::rees_ideal(j).gens.size());
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepParallel)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ReesIdeal)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
