#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hammersley/bignum.hpp"

namespace hammersley {

enum class StatMode { exact, sampled };

// Exact mode stores n beyond which the table DP is refused; the same bound
// caps the exact increment distribution.
inline constexpr int kMaxExactIncrementN = 13;

// Distribution of the increment statistic #inc = 1 + trailing zeros over
// length-n words of HAD_k. Exact mode carries true rationals; sampled mode
// carries raw counts (frequencies derive from them losslessly).
struct IncrementDistribution {
  StatMode mode = StatMode::exact;
  int k = 0;
  int n = 0;
  std::uint64_t samples = 0;             // sampled mode
  std::uint64_t seed = 0;                // sampled mode
  std::map<int, Rat> exact_pmf;          // exact mode
  std::map<int, std::uint64_t> counts;   // sampled mode

  double probability(int i) const;
  Rat exact_mean() const;                // exact mode only
  double mean() const;
  // Unbiased sample variance of #inc (sampled mode only).
  double sample_variance() const;
};

// Pr[#inc = i] = sum_{|w|=n, inc(w)=i} F_k(w) / n!, exact.
IncrementDistribution exact_increment_distribution(int n, int k);

// Exact rational mean of the exact distribution.
Rat expected_increments(int n, int k);

// Empirical distribution over `samples` independent trajectories.
// Deterministic for fixed (seed, samples) and any thread count.
IncrementDistribution sampled_increment_distribution(int n, int k, std::uint64_t samples,
                                                     std::uint64_t seed, int threads = 1);

// Maximum-likelihood geometric fit p = 1/mean on support {1, 2, ...}, with
// the per-coefficient residuals |Pr[i] - p(1-p)^(i-1)|.
struct GeometricFit {
  double p = 0.0;
  std::vector<double> residuals;  // residuals[i-1] belongs to coefficient i
};
GeometricFit geometric_fit(const IncrementDistribution& d);

struct ScalingEstimate {
  StatMode mode = StatMode::sampled;
  int k = 0;
  int n = 0;
  std::uint64_t samples = 0;  // sampled mode
  std::uint64_t seed = 0;     // sampled mode

  Rat exact_mean;             // exact mode only
  double mean_increments = 0.0;
  double fitted_p = 0.0;      // 1 / mean_increments
  double lambda_hat = 0.0;    // = mean_increments
  double half_width = 0.0;    // 95% normal interval (sampled mode)

  static constexpr double kPhi = 1.6180339887498949;     // (1+sqrt 5)/2
  static constexpr double kPStar = 0.6180339887498949;   // (sqrt 5 - 1)/2

  double gap_to_phi() const { return kPhi - lambda_hat; }
};

// Sampled estimate of the scaling constant at length n.
ScalingEstimate lambda_estimate(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                int threads = 1);

// Exact-mode estimate (n <= kMaxExactIncrementN).
ScalingEstimate lambda_estimate_exact(int n, int k);

// Empirical fraction of each digit 0..k in sampled length-n words.
// Measurement only; no limiting values are asserted.
struct DigitFrequencies {
  int k = 0;
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> frequency;  // index = digit value
};
DigitFrequencies digit_frequencies(int n, int k, std::uint64_t samples, std::uint64_t seed,
                                   int threads = 1);

}  // namespace hammersley
