// Serial reference vs OpenMP point-counting kernel, and the two intersection
// number routes.

#include <benchmark/benchmark.h>

#include "dqp/chow.hpp"
#include "dqp/ffcount.hpp"
#include "dqp/le_engine.hpp"

namespace {

using dqp::ffcount::NormalFormSpec;

void BM_CountSerial(benchmark::State& state) {
  const NormalFormSpec spec(static_cast<int>(state.range(0)), 0);
  const auto prime = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqp::ffcount::kernels::count_serial(spec, prime, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dqp::ffcount::total_points(spec, prime)));
}

void BM_CountParallel(benchmark::State& state) {
  const NormalFormSpec spec(static_cast<int>(state.range(0)), 0);
  const auto prime = static_cast<std::uint64_t>(state.range(1));
  const int jobs = static_cast<int>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dqp::ffcount::kernels::count_parallel(spec, prime, 1, jobs));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(dqp::ffcount::total_points(spec, prime)));
}

void BM_IntersectionRing(benchmark::State& state) {
  const auto spec = dqp::le::build_le_system(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dqp::chow::intersection_number_ring(spec.system));
}

void BM_IntersectionFulton(benchmark::State& state) {
  const auto spec = dqp::le::build_le_system(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(dqp::chow::intersection_number_fulton(spec.system));
}

}  // namespace

BENCHMARK(BM_CountSerial)->Args({2, 5})->Args({2, 11})->Args({3, 3})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountParallel)
    ->Args({2, 5, 1})
    ->Args({2, 11, 1})
    ->Args({2, 11, 4})
    ->Args({3, 3, 1})
    ->Args({3, 5, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectionRing)->DenseRange(2, 5);
BENCHMARK(BM_IntersectionFulton)->DenseRange(2, 5);

BENCHMARK_MAIN();
