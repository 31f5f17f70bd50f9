#include <benchmark/benchmark.h>

#include "hammersley/process.hpp"
#include "hammersley/series.hpp"
#include "hammersley/word.hpp"

namespace {

using namespace hammersley;

// k^{n(k-1)+1} 0^n: dominant for every n, with a long zero tail that makes
// the reverse recursion branch heavily.
Word heavy_word(int n, int k) {
  Word w;
  for (int i = 0; i < n * (k - 1) + 1; ++i) w.push_back(Letter::digit(k));
  for (int i = 0; i < n; ++i) w.push_back(Letter::digit(0));
  return w;
}

void BM_multiplicity_cold(benchmark::State& state) {
  const Word w = heavy_word(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    MemoStore memo;
    benchmark::DoNotOptimize(multiplicity(w, 2, memo));
  }
}
BENCHMARK(BM_multiplicity_cold)->Arg(4)->Arg(6)->Arg(8);

void BM_multiplicity_warm(benchmark::State& state) {
  const Word w = heavy_word(static_cast<int>(state.range(0)), 2);
  MemoStore memo;
  multiplicity(w, 2, memo);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiplicity(w, 2, memo));
  }
}
BENCHMARK(BM_multiplicity_warm)->Arg(8);

void BM_series_table(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_table(n, 2));
  }
}
BENCHMARK(BM_series_table)->Arg(6)->Arg(8)->Arg(10);

void BM_interval_multiplicity(benchmark::State& state) {
  Word w;
  const int n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    w.push_back(Letter::digit(2));
    w.push_back(Letter::diamond());
  }
  for (auto _ : state) {
    MemoStore memo;
    benchmark::DoNotOptimize(interval_multiplicity(w, 2, memo));
  }
}
BENCHMARK(BM_interval_multiplicity)->Arg(3)->Arg(4)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
