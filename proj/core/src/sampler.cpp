#include "hammersley/sampler.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "hammersley/rng.hpp"
#include "hammersley/word_stats.hpp"

namespace hammersley {

namespace detail {

void FreeSlotTree::reset(std::size_t n) {
  n_ = n;
  top_ = n == 0 ? 0 : std::bit_floor(n);
  tree_.assign(n + 1, 0);
  // All slots free: prefix sums of an all-ones array.
  for (std::size_t i = 1; i <= n; ++i) tree_[i] = static_cast<std::uint32_t>(i & (0 - i));
}

std::size_t FreeSlotTree::pop_free(std::size_t p) {
  std::size_t pos = 0;
  std::uint32_t remaining = static_cast<std::uint32_t>(p);
  for (std::size_t step = top_; step > 0; step >>= 1) {
    const std::size_t probe = pos + step;
    if (probe <= n_ && tree_[probe] < remaining) {
      pos = probe;
      remaining -= tree_[probe];
    }
  }
  const std::size_t slot = pos + 1;
  for (std::size_t i = slot; i <= n_; i += i & (0 - i)) --tree_[i];
  return slot;
}

void PositiveTree::reset(std::size_t n) {
  leaves_ = std::bit_ceil(std::max<std::size_t>(n, 1));
  count_.assign(2 * leaves_, 0);
}

void PositiveTree::set(std::size_t pos) {
  for (std::size_t i = leaves_ + pos - 1; i >= 1; i /= 2) ++count_[i];
}

void PositiveTree::clear(std::size_t pos) {
  for (std::size_t i = leaves_ + pos - 1; i >= 1; i /= 2) --count_[i];
}

std::size_t PositiveTree::first_after(std::size_t pos) const {
  std::size_t node;
  if (pos == 0) {
    if (count_[1] == 0) return 0;
    node = 1;
  } else {
    // Climb from the leaf of pos until a right sibling holds a positive
    // position, then descend to its leftmost one.
    node = leaves_ + pos - 1;
    while (true) {
      if (node == 1) return 0;
      if (node % 2 == 0 && count_[node + 1] > 0) {
        node = node + 1;
        break;
      }
      node /= 2;
    }
  }
  while (node < leaves_) node = count_[2 * node] > 0 ? 2 * node : 2 * node + 1;
  return node - leaves_ + 1;
}

}  // namespace detail

HadSampler::HadSampler(std::size_t n, int k) : n_(n), k_(k) {
  validate_k(k);
  if (n == 0) throw std::invalid_argument("sampler requires n >= 1");
  gaps_.resize(n);
  final_pos_.resize(n);
  digits_.resize(n);
  digit_counts_.resize(static_cast<std::size_t>(k) + 1);
}

void HadSampler::run(std::uint64_t stream_seed) {
  Xoshiro256pp rng(stream_seed);
  for (std::size_t m = 1; m <= n_; ++m) {
    gaps_[m - 1] = static_cast<std::uint32_t>(rng.below(m));
  }
  replay_gaps();
}

void HadSampler::replay(const Trajectory& t) {
  if (t.gaps.size() != n_) {
    throw std::invalid_argument("trajectory length " + std::to_string(t.gaps.size()) +
                                " does not match sampler length " + std::to_string(n_));
  }
  for (std::size_t m = 1; m <= n_; ++m) {
    if (t.gaps[m - 1] > m - 1) {
      throw std::invalid_argument("trajectory gap out of range at step " + std::to_string(m));
    }
  }
  std::copy(t.gaps.begin(), t.gaps.end(), gaps_.begin());
  replay_gaps();
}

void HadSampler::replay_gaps() {
  // Pass 1, right to left: the letters of steps > m already own their final
  // positions, so the free slots left for step m list the final positions of
  // its word in order; the insertion at gap g lands in the (g+1)-th one.
  slots_.reset(n_);
  for (std::size_t m = n_; m >= 1; --m) {
    final_pos_[m - 1] = static_cast<std::uint32_t>(slots_.pop_free(gaps_[m - 1] + 1));
  }
  // Pass 2, left to right: activate each insertion at its final position and
  // decrement the first positive digit to its right.
  positive_.reset(n_);
  std::fill(digits_.begin(), digits_.end(), 0);
  std::fill(digit_counts_.begin(), digit_counts_.end(), 0);
  for (std::size_t m = 1; m <= n_; ++m) {
    const std::size_t pos = final_pos_[m - 1];
    digits_[pos - 1] = k_;
    ++digit_counts_[static_cast<std::size_t>(k_)];
    positive_.set(pos);
    const std::size_t hit = positive_.first_after(pos);
    if (hit != 0) {
      const std::int32_t d = digits_[hit - 1];
      --digit_counts_[static_cast<std::size_t>(d)];
      ++digit_counts_[static_cast<std::size_t>(d - 1)];
      digits_[hit - 1] = d - 1;
      if (d == 1) positive_.clear(hit);
    }
  }
  increments_ = 1;
  for (std::size_t i = n_; i-- > 0 && digits_[i] == 0;) ++increments_;
}

Word HadSampler::word() const {
  std::vector<Letter> letters;
  letters.reserve(n_);
  for (const std::int32_t d : digits_) letters.push_back(Letter::digit(d));
  return Word(std::move(letters));
}

IntervalSampler::IntervalSampler(std::size_t n, int k) : n_(n), k_(k) {
  validate_k(k);
  if (n == 0) throw std::invalid_argument("sampler requires n >= 1");
  picks_.resize(n);
  k_pos_.resize(n);
  diamond_pos_.resize(n);
  digits_.resize(2 * n);
  digit_counts_.resize(static_cast<std::size_t>(k) + 1);
}

void IntervalSampler::run(std::uint64_t stream_seed) {
  Xoshiro256pp rng(stream_seed);
  for (std::size_t m = 1; m <= n_; ++m) {
    const std::uint64_t gaps = 2 * m - 1;
    const auto x = static_cast<std::uint32_t>(rng.below(gaps));
    const auto y = static_cast<std::uint32_t>(rng.below(gaps));
    picks_[m - 1] = {x, y};
  }
  replay_picks();
}

void IntervalSampler::replay(const IntervalTrajectory& t) {
  if (t.picks.size() != n_) {
    throw std::invalid_argument("trajectory length " + std::to_string(t.picks.size()) +
                                " does not match sampler length " + std::to_string(n_));
  }
  for (std::size_t m = 1; m <= n_; ++m) {
    if (t.picks[m - 1].x > 2 * (m - 1) || t.picks[m - 1].y > 2 * (m - 1)) {
      throw std::invalid_argument("interval pick out of range at step " + std::to_string(m));
    }
  }
  std::copy(t.picks.begin(), t.picks.end(), picks_.begin());
  replay_picks();
}

void IntervalSampler::replay_picks() {
  // Within one step the diamond is inserted after the k, so the reverse pass
  // resolves the diamond slot first. With a = min(x,y), b = max(x,y), the k
  // is the (a+1)-th letter of the intermediate word and the diamond the
  // (b+2)-th letter of the full step result.
  slots_.reset(2 * n_);
  for (std::size_t m = n_; m >= 1; --m) {
    const auto [x, y] = picks_[m - 1];
    const std::uint32_t a = std::min(x, y);
    const std::uint32_t b = std::max(x, y);
    diamond_pos_[m - 1] = static_cast<std::uint32_t>(slots_.pop_free(b + 2));
    k_pos_[m - 1] = static_cast<std::uint32_t>(slots_.pop_free(a + 1));
  }
  positive_.reset(2 * n_);
  std::fill(digits_.begin(), digits_.end(), 0);
  std::fill(digit_counts_.begin(), digit_counts_.end(), 0);
  for (std::size_t m = 1; m <= n_; ++m) {
    const std::size_t kp = k_pos_[m - 1];
    const std::size_t dp = diamond_pos_[m - 1];
    digits_[kp - 1] = k_;
    ++digit_counts_[static_cast<std::size_t>(k_)];
    positive_.set(kp);
    digits_[dp - 1] = -1;
    const std::size_t hit = positive_.first_after(dp);
    if (hit != 0) {
      const std::int32_t d = digits_[hit - 1];
      --digit_counts_[static_cast<std::size_t>(d)];
      ++digit_counts_[static_cast<std::size_t>(d - 1)];
      digits_[hit - 1] = d - 1;
      if (d == 1) positive_.clear(hit);
    }
  }
}

Word IntervalSampler::word() const {
  std::vector<Letter> letters;
  letters.reserve(2 * n_);
  for (const std::int32_t d : digits_) {
    letters.push_back(d < 0 ? Letter::diamond() : Letter::digit(d));
  }
  return Word(std::move(letters));
}

}  // namespace hammersley
