#include "hammersley/process.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "hammersley/rng.hpp"
#include "hammersley/sampler.hpp"
#include "hammersley/word_stats.hpp"

namespace hammersley {

Nat CountTable::total_mass() const {
  Nat mass = 0;
  for (const auto& [word, count] : counts) mass += count;
  return mass;
}

namespace {

void decrement_first_positive(Word& w, std::size_t from) {
  for (std::size_t i = from; i < w.size(); ++i) {
    if (w[i].is_digit() && w[i].digit_value() > 0) {
      w[i] = Letter::digit(w[i].digit_value() - 1);
      return;
    }
  }
}

void check_enum_args(int n, int k, EnumMode mode, int literal_max, int collapsed_max,
                     const char* what) {
  validate_k(k);
  if (n < 1) throw std::invalid_argument(std::string(what) + " requires n >= 1");
  const int bound = mode == EnumMode::literal ? literal_max : collapsed_max;
  if (n > bound) {
    throw std::invalid_argument(std::string(what) + " bounded at n=" + std::to_string(bound) +
                                (mode == EnumMode::literal ? " (literal mode)" : "") +
                                ", got n=" + std::to_string(n));
  }
}

}  // namespace

Word had_step(const Word& w, int k, std::size_t gap) {
  validate_plain(w, k);
  if (gap > w.size()) {
    throw std::invalid_argument("gap " + std::to_string(gap) + " out of range for length " +
                                std::to_string(w.size()));
  }
  Word out = w;
  out.insert_at(gap, Letter::digit(k));
  decrement_first_positive(out, gap + 1);
  return out;
}

Word had_replay(const Trajectory& t, int k) {
  Word w;
  for (std::size_t m = 0; m < t.gaps.size(); ++m) {
    if (t.gaps[m] > m) {
      throw std::invalid_argument("trajectory gap " + std::to_string(t.gaps[m]) +
                                  " out of range at step " + std::to_string(m + 1));
    }
    w = had_step(w, k, t.gaps[m]);
  }
  return w;
}

Trajectory sample_trajectory(std::size_t n, std::uint64_t seed) {
  Xoshiro256pp rng(substream_seed(seed, 0));
  Trajectory t;
  t.gaps.resize(n);
  for (std::size_t m = 1; m <= n; ++m) {
    t.gaps[m - 1] = static_cast<std::uint32_t>(rng.below(m));
  }
  return t;
}

Word had_sample(std::size_t n, int k, std::uint64_t seed) {
  validate_k(k);
  if (n == 0) throw std::invalid_argument("had_sample requires n >= 1");
  HadSampler sampler(n, k);
  sampler.run(substream_seed(seed, 0));
  return sampler.word();
}

namespace {

void enumerate_literal_rec(const Word& w, std::size_t depth, std::size_t n, int k,
                           std::unordered_map<Word, Nat, WordHash>& counts) {
  if (depth == n) {
    counts[w] += 1;
    return;
  }
  for (std::size_t gap = 0; gap <= w.size(); ++gap) {
    enumerate_literal_rec(had_step(w, k, gap), depth + 1, n, k, counts);
  }
}

}  // namespace

EnumerationTable had_enumerate(int n, int k, EnumMode mode) {
  check_enum_args(n, k, mode, kMaxLiteralHadN, kMaxCollapsedHadN, "had_enumerate");
  EnumerationTable table;
  table.k = k;
  table.n = n;
  table.process = Process::had;
  if (mode == EnumMode::literal) {
    enumerate_literal_rec(Word{}, 0, static_cast<std::size_t>(n), k, table.counts);
    return table;
  }
  std::unordered_map<Word, Nat, WordHash> level;
  level.emplace(Word{Letter::digit(k)}, 1);
  for (int m = 2; m <= n; ++m) {
    std::unordered_map<Word, Nat, WordHash> next;
    next.reserve(level.size() * 2);
    for (const auto& [word, count] : level) {
      for (std::size_t gap = 0; gap < static_cast<std::size_t>(m); ++gap) {
        next[had_step(word, k, gap)] += count;
      }
    }
    level = std::move(next);
  }
  table.counts = std::move(level);
  return table;
}

Word interval_step(const Word& w, int k, std::size_t x, std::size_t y) {
  validate_letters(w, k);
  if (x > w.size() || y > w.size()) {
    throw std::invalid_argument("gap pick out of range for length " + std::to_string(w.size()));
  }
  const std::size_t a = std::min(x, y);
  const std::size_t b = std::max(x, y);
  Word out = w;
  out.insert_at(a, Letter::digit(k));
  out.insert_at(b + 1, Letter::diamond());
  decrement_first_positive(out, b + 2);
  return out;
}

Word interval_replay(const IntervalTrajectory& t, int k) {
  Word w;
  for (std::size_t m = 0; m < t.picks.size(); ++m) {
    const auto [x, y] = t.picks[m];
    if (x > 2 * m || y > 2 * m) {
      throw std::invalid_argument("interval pick out of range at step " + std::to_string(m + 1));
    }
    w = interval_step(w, k, x, y);
  }
  return w;
}

IntervalTrajectory sample_interval_trajectory(std::size_t n, std::uint64_t seed) {
  Xoshiro256pp rng(substream_seed(seed, 0));
  IntervalTrajectory t;
  t.picks.resize(n);
  for (std::size_t m = 1; m <= n; ++m) {
    const std::uint64_t gaps = 2 * m - 1;
    const auto x = static_cast<std::uint32_t>(rng.below(gaps));
    const auto y = static_cast<std::uint32_t>(rng.below(gaps));
    t.picks[m - 1] = {x, y};
  }
  return t;
}

Word interval_sample(std::size_t n, int k, std::uint64_t seed) {
  validate_k(k);
  if (n == 0) throw std::invalid_argument("interval_sample requires n >= 1");
  IntervalSampler sampler(n, k);
  sampler.run(substream_seed(seed, 0));
  return sampler.word();
}

namespace {

void interval_literal_rec(const Word& w, std::size_t depth, std::size_t n, int k,
                          std::unordered_map<Word, Nat, WordHash>& counts) {
  if (depth == n) {
    counts[w] += 1;
    return;
  }
  for (std::size_t x = 0; x <= w.size(); ++x) {
    for (std::size_t y = 0; y <= w.size(); ++y) {
      interval_literal_rec(interval_step(w, k, x, y), depth + 1, n, k, counts);
    }
  }
}

}  // namespace

EnumerationTable interval_enumerate(int n, int k, EnumMode mode) {
  check_enum_args(n, k, mode, kMaxLiteralIntervalN, kMaxCollapsedIntervalN, "interval_enumerate");
  EnumerationTable table;
  table.k = k;
  table.n = n;
  table.process = Process::interval;
  if (mode == EnumMode::literal) {
    interval_literal_rec(Word{}, 0, static_cast<std::size_t>(n), k, table.counts);
    return table;
  }
  std::unordered_map<Word, Nat, WordHash> level;
  level.emplace(interval_step(Word{}, k, 0, 0), 1);
  for (int m = 2; m <= n; ++m) {
    std::unordered_map<Word, Nat, WordHash> next;
    next.reserve(level.size() * 8);
    const std::size_t size = 2 * static_cast<std::size_t>(m - 1);
    for (const auto& [word, count] : level) {
      for (std::size_t x = 0; x <= size; ++x) {
        for (std::size_t y = 0; y <= size; ++y) {
          next[interval_step(word, k, x, y)] += count;
        }
      }
    }
    level = std::move(next);
  }
  table.counts = std::move(level);
  return table;
}

Word encode_values(std::span<const double> values, int k) {
  validate_k(k);
  // (value, remaining lives) per particle, kept sorted by value.
  std::map<double, int> particles;
  for (const double value : values) {
    if (particles.contains(value)) {
      throw std::invalid_argument("encode_values requires pairwise distinct values");
    }
    auto larger = particles.upper_bound(value);
    while (larger != particles.end() && larger->second == 0) ++larger;
    if (larger != particles.end()) larger->second -= 1;
    particles.emplace(value, k);
  }
  Word out;
  for (const auto& [value, lives] : particles) out.push_back(Letter::digit(lives));
  return out;
}

}  // namespace hammersley
