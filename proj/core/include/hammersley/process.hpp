#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "hammersley/bignum.hpp"
#include "hammersley/word.hpp"

namespace hammersley {

enum class Process { had, interval };

// Forward enumeration strategy. Collapsed runs a word-level DP (trajectory
// counts factor through words because the step distribution depends only on
// the current word); literal walks every trajectory and is the independent
// oracle for small n.
enum class EnumMode { collapsed, literal };

// Gap choices g_1..g_n. Gaps are 0-based: before step m the word has m-1
// letters, so g_m ranges over {0, ..., m-1}.
struct Trajectory {
  std::vector<std::uint32_t> gaps;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// Ordered gap picks (x_m, y_m), each on {0, ..., 2(m-1)}.
struct IntervalTrajectory {
  struct Pick {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    friend bool operator==(const Pick&, const Pick&) = default;
  };
  std::vector<Pick> picks;

  friend bool operator==(const IntervalTrajectory&, const IntervalTrajectory&) = default;
};

// Word -> exact count of trajectories (HAD) or ordered pick-sequences
// (interval) producing it after n steps.
struct CountTable {
  int k = 0;
  int n = 0;
  Process process = Process::had;
  std::unordered_map<Word, Nat, WordHash> counts;

  Nat total_mass() const;
};
using EnumerationTable = CountTable;

// Resource guards for exhaustive enumeration (literal walks n! or
// prod (2m-1)^2 sequences; collapsed tables grow with the language).
inline constexpr int kMaxLiteralHadN = 8;
inline constexpr int kMaxCollapsedHadN = 13;
inline constexpr int kMaxLiteralIntervalN = 5;
inline constexpr int kMaxCollapsedIntervalN = 6;

// Inserts digit k at the gap, then decrements the first strictly positive
// digit to the right of the insertion (zeros skipped); no change if none
// exists. Requires w plain with digits <= k and gap <= |w|.
Word had_step(const Word& w, int k, std::size_t gap);

// Folds had_step over t starting from the empty word.
Word had_replay(const Trajectory& t, int k);

// Uniform random trajectory of length n (gap at step m uniform on m gaps).
// Deterministic per seed; uses substream #0 of the seed, so it matches
// sample #0 of the batch samplers with the same seed.
Trajectory sample_trajectory(std::size_t n, std::uint64_t seed);

// Word of the seed's random trajectory; O(n log n) via the batch sampler.
Word had_sample(std::size_t n, int k, std::uint64_t seed);

EnumerationTable had_enumerate(int n, int k, EnumMode mode = EnumMode::collapsed);

// One interval step: with a = min(x,y), b = max(x,y), inserts digit k at gap
// a, inserts a diamond at gap b+1 of the intermediate word (adjacent to the
// new k when a = b), then decrements the first strictly positive digit
// strictly right of the new diamond (zeros and diamonds skipped), if any.
// Requires digits <= k and x, y <= |w|.
Word interval_step(const Word& w, int k, std::size_t x, std::size_t y);

Word interval_replay(const IntervalTrajectory& t, int k);

IntervalTrajectory sample_interval_trajectory(std::size_t n, std::uint64_t seed);

Word interval_sample(std::size_t n, int k, std::uint64_t seed);

EnumerationTable interval_enumerate(int n, int k, EnumMode mode = EnumMode::collapsed);

// Runs the particle process on real values: each arriving value takes one
// life from the smallest strictly larger value that still has lives, and the
// result lists the life counts in increasing value order. Values must be
// pairwise distinct.
Word encode_values(std::span<const double> values, int k);

}  // namespace hammersley
