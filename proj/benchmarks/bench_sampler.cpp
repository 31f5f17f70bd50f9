#include <benchmark/benchmark.h>

#include "hammersley/process.hpp"
#include "hammersley/rng.hpp"
#include "hammersley/sampler.hpp"

namespace {

using namespace hammersley;

void BM_had_sample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  HadSampler sampler(n, 2);
  std::uint64_t index = 0;
  for (auto _ : state) {
    sampler.run(substream_seed(1, index++));
    benchmark::DoNotOptimize(sampler.increment_count());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(BM_had_sample)->Arg(1000)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_interval_sample(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntervalSampler sampler(n, 2);
  std::uint64_t index = 0;
  for (auto _ : state) {
    sampler.run(substream_seed(1, index++));
    benchmark::DoNotOptimize(sampler.digit_counts());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(BM_interval_sample)->Arg(1000)->Arg(10000)->Arg(100000);

// The direct array fold; quadratic, kept as the baseline the tree-based
// sampler is measured against.
void BM_had_replay_fold(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Trajectory t = sample_trajectory(n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(had_replay(t, 2));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(BM_had_replay_fold)->Arg(1000)->Arg(10000);

}  // namespace
