#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hammersley/process.hpp"
#include "hammersley/word.hpp"

namespace hammersley {

// Membership in the dominant language; identical to is_k_dominant.
bool accept_dominant(const Word& w, int k);

// Counter-machine configuration after reading one letter.
struct CounterConfig {
  std::int64_t counter = 0;
  bool rejected = false;

  friend bool operator==(const CounterConfig&, const CounterConfig&) = default;
};

struct PdaRun {
  bool accepted = false;
  std::vector<CounterConfig> trace;            // one entry per processed letter
  std::optional<std::size_t> rejected_at;      // 1-based index of the fatal letter
};

// One-counter automaton for the dominant language. The first letter must be
// k (else reject); k pushes one star; a digit i <= k-2 pops k-1-i stars;
// k-1 is skipped. The run rejects as soon as the counter reaches 0, since a
// prefix with no stars left can never recover, and accepts iff the word is
// non-empty, the run never rejected, and the final counter is >= 1.
// Processing stops at the rejecting letter; its config ends the trace.
PdaRun pda_run(const Word& w, int k);

struct IntervalReport {
  bool member = false;
  // First violated membership condition: 1 is the whole-word diamond count
  // |w|_d = |w|/2 (the empty word fails it by convention), 2a is the prefix
  // condition 2|p|_d <= |p|, 2b is the prefix condition
  // digit_sum(p) + (k+1)|p|_d >= k|p|.
  enum class Failure { none, condition_1, condition_2a, condition_2b };
  Failure failure = Failure::none;
  std::size_t prefix_length = 0;  // shortest offending prefix (conditions 2a/2b)
};

// Membership in the interval language by the two-condition characterization.
// Digits above k are an input error.
IntervalReport check_interval(const Word& w, int k);
bool accept_interval(const Word& w, int k);

// Membership in the effective language (diamond-free projections of
// interval-reachable words), which coincides with the dominant language;
// the enumeration cross-check of that identity lives in the test suite.
bool accept_effective(const Word& w, int k);

// Parameters of the shape k^{c+d+e} d^{c+e} (k-1)^c d^{c+d} (d = diamond).
struct SkDecomposition {
  std::int64_t c = 0;
  std::int64_t d = 0;
  std::int64_t e = 0;

  friend bool operator==(const SkDecomposition&, const SkDecomposition&) = default;
};

// If w has shape k^alpha diamond^beta (k-1)^gamma diamond^delta and the
// system alpha = c+d+e, beta = c+e, gamma = c, delta = c+d has a nonnegative
// solution, returns it; otherwise nullopt. Membership of a shaped word in
// the interval language is equivalent to solvability.
std::optional<SkDecomposition> sk_decompose(const Word& w, int k);

// A trajectory whose replay is w, built by reverse search: repeatedly undo
// one insertion whose predecessor is dominant until the single-letter word
// remains. Every dominant word admits one; non-dominant input throws
// std::invalid_argument.
Trajectory witness_trajectory(const Word& w, int k);

}  // namespace hammersley
