#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hammersley/process.hpp"

namespace hammersley {

namespace detail {

// Fenwick tree over n slots that starts all-free and answers "occupy and
// return the p-th free slot" in O(log n).
class FreeSlotTree {
 public:
  void reset(std::size_t n);
  std::size_t pop_free(std::size_t p);

 private:
  std::size_t n_ = 0;
  std::size_t top_ = 0;  // largest power of two <= n_
  std::vector<std::uint32_t> tree_;
};

// Segment tree over positions 1..n that tracks which positions hold a
// strictly positive digit and answers successor queries.
class PositiveTree {
 public:
  void reset(std::size_t n);
  void set(std::size_t pos);
  void clear(std::size_t pos);
  // First positive position strictly greater than pos; 0 if none.
  std::size_t first_after(std::size_t pos) const;

 private:
  std::size_t leaves_ = 1;
  std::vector<std::uint32_t> count_;
};

}  // namespace detail

// Replays HAD_k trajectories in O(n log n) instead of the quadratic array
// fold: a right-to-left pass resolves each insertion gap to its final array
// position (Fenwick free-slot ranks), then a left-to-right pass applies the
// decrements on a positive-digit segment tree. One instance is reusable
// across runs without reallocation; per-run statistics stay readable until
// the next run.
class HadSampler {
 public:
  HadSampler(std::size_t n, int k);

  // Draws the gap sequence from the given substream and replays it.
  void run(std::uint64_t stream_seed);

  // Replays a fixed trajectory (|t| must equal n).
  void replay(const Trajectory& t);

  std::size_t increment_count() const { return increments_; }

  // Count of each digit 0..k in the final word.
  std::span<const std::uint64_t> digit_counts() const { return digit_counts_; }

  Word word() const;

 private:
  void replay_gaps();

  std::size_t n_;
  int k_;
  std::vector<std::uint32_t> gaps_;
  std::vector<std::uint32_t> final_pos_;
  std::vector<std::int32_t> digits_;
  std::vector<std::uint64_t> digit_counts_;
  detail::FreeSlotTree slots_;
  detail::PositiveTree positive_;
  std::size_t increments_ = 0;
};

// The interval-process counterpart over 2n final positions. Each step
// resolves the diamond slot first (it was inserted after the k of the same
// step), then the k slot.
class IntervalSampler {
 public:
  IntervalSampler(std::size_t n, int k);

  void run(std::uint64_t stream_seed);
  void replay(const IntervalTrajectory& t);

  // Count of each digit 0..k in the final word (diamonds excluded).
  std::span<const std::uint64_t> digit_counts() const { return digit_counts_; }

  Word word() const;

 private:
  void replay_picks();

  std::size_t n_;
  int k_;
  std::vector<IntervalTrajectory::Pick> picks_;
  std::vector<std::uint32_t> k_pos_;
  std::vector<std::uint32_t> diamond_pos_;
  std::vector<std::int32_t> digits_;  // -1 marks a diamond
  std::vector<std::uint64_t> digit_counts_;
  detail::FreeSlotTree slots_;
  detail::PositiveTree positive_;
};

}  // namespace hammersley
