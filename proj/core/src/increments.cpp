#include "hammersley/increments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "hammersley/rng.hpp"
#include "hammersley/sampler.hpp"
#include "hammersley/series.hpp"
#include "hammersley/word_stats.hpp"

namespace hammersley {

namespace {

// The geometric comparison always covers at least this many coefficients,
// even when the observed support is shorter.
constexpr int kMinResidualCoefficients = 6;

void validate_sampling_args(int n, std::uint64_t samples) {
  if (n < 1) throw std::invalid_argument("sample length must be >= 1");
  if (samples < 1) throw std::invalid_argument("sample count must be >= 1");
}

// Shared sampling pass: per-sample totals are accumulated per worker and
// merged as integers, so the result is identical for every thread count.
struct SamplePass {
  std::vector<std::uint64_t> increment_hist;  // index = #inc
  std::vector<std::uint64_t> digit_totals;    // index = digit value
};

SamplePass run_sample_pass(int n, int k, std::uint64_t samples, std::uint64_t seed,
                           int threads) {
  validate_k(k);
  validate_sampling_args(n, samples);
  const std::uint64_t requested = threads < 1 ? 1 : static_cast<std::uint64_t>(threads);
  const std::uint64_t worker_count = std::min(requested, samples);
  std::vector<SamplePass> parts(worker_count);
  const auto run_range = [&](std::uint64_t worker, std::uint64_t from, std::uint64_t to) {
    SamplePass& part = parts[worker];
    part.increment_hist.assign(static_cast<std::size_t>(n) + 2, 0);
    part.digit_totals.assign(static_cast<std::size_t>(k) + 1, 0);
    HadSampler sampler(static_cast<std::size_t>(n), k);
    for (std::uint64_t i = from; i < to; ++i) {
      sampler.run(substream_seed(seed, i));
      ++part.increment_hist[sampler.increment_count()];
      const auto counts = sampler.digit_counts();
      for (std::size_t d = 0; d < counts.size(); ++d) part.digit_totals[d] += counts[d];
    }
  };
  if (worker_count == 1) {
    run_range(0, 0, samples);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (std::uint64_t t = 0; t < worker_count; ++t) {
      const std::uint64_t from = samples * t / worker_count;
      const std::uint64_t to = samples * (t + 1) / worker_count;
      pool.emplace_back(run_range, t, from, to);
    }
    for (auto& thread : pool) thread.join();
  }
  SamplePass merged;
  merged.increment_hist.assign(static_cast<std::size_t>(n) + 2, 0);
  merged.digit_totals.assign(static_cast<std::size_t>(k) + 1, 0);
  for (const SamplePass& part : parts) {
    for (std::size_t i = 0; i < part.increment_hist.size(); ++i) {
      merged.increment_hist[i] += part.increment_hist[i];
    }
    for (std::size_t d = 0; d < part.digit_totals.size(); ++d) {
      merged.digit_totals[d] += part.digit_totals[d];
    }
  }
  return merged;
}

}  // namespace

double IncrementDistribution::probability(int i) const {
  if (mode == StatMode::exact) {
    const auto it = exact_pmf.find(i);
    return it == exact_pmf.end() ? 0.0 : to_double(it->second);
  }
  const auto it = counts.find(i);
  return it == counts.end() ? 0.0
                            : static_cast<double>(it->second) / static_cast<double>(samples);
}

Rat IncrementDistribution::exact_mean() const {
  if (mode != StatMode::exact) {
    throw std::logic_error("exact_mean requires an exact distribution");
  }
  Rat mean = 0;
  for (const auto& [i, p] : exact_pmf) mean += p * i;
  return mean;
}

double IncrementDistribution::mean() const {
  if (mode == StatMode::exact) return to_double(exact_mean());
  std::uint64_t weighted = 0;
  for (const auto& [i, c] : counts) weighted += static_cast<std::uint64_t>(i) * c;
  return static_cast<double>(weighted) / static_cast<double>(samples);
}

double IncrementDistribution::sample_variance() const {
  if (mode != StatMode::sampled) {
    throw std::logic_error("sample_variance requires a sampled distribution");
  }
  if (samples < 2) throw std::logic_error("sample_variance requires >= 2 samples");
  std::uint64_t weighted_sq = 0;
  for (const auto& [i, c] : counts) {
    weighted_sq += static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(i) * c;
  }
  const double m = mean();
  const double population =
      static_cast<double>(weighted_sq) / static_cast<double>(samples) - m * m;
  return population * static_cast<double>(samples) / static_cast<double>(samples - 1);
}

IncrementDistribution exact_increment_distribution(int n, int k) {
  if (n > kMaxExactIncrementN) {
    throw std::invalid_argument("exact increment distribution limited to n <= " +
                                std::to_string(kMaxExactIncrementN));
  }
  const SeriesTable table = series_table(n, k);
  std::map<int, Nat> sums;
  for (const auto& [word, count] : table.counts) {
    sums[static_cast<int>(increment_count(word))] += count;
  }
  IncrementDistribution d;
  d.mode = StatMode::exact;
  d.k = k;
  d.n = n;
  const Nat mass = factorial(n);
  for (const auto& [i, sum] : sums) d.exact_pmf.emplace(i, Rat(sum, mass));
  return d;
}

Rat expected_increments(int n, int k) { return exact_increment_distribution(n, k).exact_mean(); }

IncrementDistribution sampled_increment_distribution(int n, int k, std::uint64_t samples,
                                                     std::uint64_t seed, int threads) {
  const SamplePass pass = run_sample_pass(n, k, samples, seed, threads);
  IncrementDistribution d;
  d.mode = StatMode::sampled;
  d.k = k;
  d.n = n;
  d.samples = samples;
  d.seed = seed;
  for (std::size_t i = 0; i < pass.increment_hist.size(); ++i) {
    if (pass.increment_hist[i] > 0) d.counts.emplace(static_cast<int>(i), pass.increment_hist[i]);
  }
  return d;
}

GeometricFit geometric_fit(const IncrementDistribution& d) {
  GeometricFit fit;
  fit.p = 1.0 / d.mean();
  int top = kMinResidualCoefficients;
  if (d.mode == StatMode::exact && !d.exact_pmf.empty()) {
    top = std::max(top, d.exact_pmf.rbegin()->first);
  }
  if (d.mode == StatMode::sampled && !d.counts.empty()) {
    top = std::max(top, d.counts.rbegin()->first);
  }
  fit.residuals.reserve(static_cast<std::size_t>(top));
  double tail = 1.0;  // (1-p)^(i-1)
  for (int i = 1; i <= top; ++i) {
    fit.residuals.push_back(std::abs(d.probability(i) - fit.p * tail));
    tail *= 1.0 - fit.p;
  }
  return fit;
}

ScalingEstimate lambda_estimate(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                int threads) {
  const IncrementDistribution d = sampled_increment_distribution(n, k, samples, seed, threads);
  ScalingEstimate est;
  est.mode = StatMode::sampled;
  est.k = k;
  est.n = n;
  est.samples = samples;
  est.seed = seed;
  est.mean_increments = d.mean();
  est.fitted_p = 1.0 / est.mean_increments;
  est.lambda_hat = est.mean_increments;
  est.half_width =
      samples >= 2 ? 1.96 * std::sqrt(d.sample_variance() / static_cast<double>(samples)) : 0.0;
  return est;
}

ScalingEstimate lambda_estimate_exact(int n, int k) {
  const IncrementDistribution d = exact_increment_distribution(n, k);
  ScalingEstimate est;
  est.mode = StatMode::exact;
  est.k = k;
  est.n = n;
  est.exact_mean = d.exact_mean();
  est.mean_increments = to_double(est.exact_mean);
  est.fitted_p = 1.0 / est.mean_increments;
  est.lambda_hat = est.mean_increments;
  est.half_width = 0.0;
  return est;
}

DigitFrequencies digit_frequencies(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                   int threads) {
  const SamplePass pass = run_sample_pass(n, k, samples, seed, threads);
  DigitFrequencies f;
  f.k = k;
  f.n = n;
  f.samples = samples;
  f.seed = seed;
  f.frequency.resize(pass.digit_totals.size());
  const double letters = static_cast<double>(samples) * static_cast<double>(n);
  for (std::size_t d = 0; d < pass.digit_totals.size(); ++d) {
    f.frequency[d] = static_cast<double>(pass.digit_totals[d]) / letters;
  }
  return f;
}

}  // namespace hammersley
