#include "hammersley/series.hpp"

#include <map>
#include <utility>
#include <vector>

#include "hammersley/recognize.hpp"
#include "hammersley/word_stats.hpp"
#include "reverse_steps.hpp"

namespace hammersley {

std::optional<Nat> MemoStore::find(int k, const Word& w) const {
  const std::lock_guard<std::mutex> lock(mutex_);
  const auto it = entries_.find(Key{k, w});
  if (it == entries_.end()) return std::nullopt;
  if (capacity_ > 0) order_.splice(order_.begin(), order_, it->second.order);
  return it->second.value;
}

void MemoStore::insert(int k, const Word& w, const Nat& value) {
  const std::lock_guard<std::mutex> lock(mutex_);
  Key key{k, w};
  const auto it = entries_.find(key);
  if (it != entries_.end()) {
    if (capacity_ > 0) order_.splice(order_.begin(), order_, it->second.order);
    return;
  }
  if (capacity_ > 0 && entries_.size() == capacity_) {
    entries_.erase(order_.back());
    order_.pop_back();
  }
  order_.push_front(std::move(key));
  entries_.emplace(order_.front(), Entry{value, order_.begin()});
}

std::size_t MemoStore::size() const {
  const std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

Nat multiplicity(const Word& w, int k, MemoStore& memo) {
  validate_plain(w, k);
  if (!is_k_dominant(w, k)) return 0;
  if (w.size() == 1) return 1;
  if (const auto hit = memo.find(k, w)) return *hit;
  Nat total = 0;
  for (const auto& [pred, gap] : detail::reverse_candidates(w, k)) {
    total += multiplicity(pred, k, memo);
  }
  memo.insert(k, w, total);
  return total;
}

Nat multiplicity(const Word& w, int k) {
  MemoStore memo;
  return multiplicity(w, k, memo);
}

ExactProbability probability(const Word& w, int k, MemoStore& memo) {
  return ExactProbability(multiplicity(w, k, memo), factorial(static_cast<int>(w.size())));
}

ExactProbability probability(const Word& w, int k) {
  MemoStore memo;
  return probability(w, k, memo);
}

SeriesTable series_table(int n, int k) { return had_enumerate(n, k, EnumMode::collapsed); }

namespace {

using Runs = std::vector<std::pair<std::int64_t, std::int64_t>>;

// Rewrites a raw run list into normal form: runs with no ones merge their
// zeros leftward, runs with no zeros merge their ones rightward. A surviving
// zero block before the first ones block means the word starts with 0, which
// no trajectory produces; that is reported as nullopt.
std::optional<Runs> normalize_runs(const Runs& raw) {
  Runs out;
  for (const auto& [ones, zeros] : raw) {
    if (ones == 0) {
      if (zeros == 0) continue;
      if (out.empty()) return std::nullopt;
      out.back().second += zeros;
    } else if (!out.empty() && out.back().second == 0) {
      out.back().first += ones;
      out.back().second = zeros;
    } else {
      out.emplace_back(ones, zeros);
    }
  }
  return out;
}

Nat f1_recurse(const Runs& runs, std::map<Runs, Nat>& memo) {
  if (runs.empty()) return 0;
  if (runs.size() == 1 && runs[0] == std::pair<std::int64_t, std::int64_t>{1, 0}) return 1;
  if (const auto it = memo.find(runs); it != memo.end()) return it->second;
  Nat total = 0;
  const auto recurse = [&](const Runs& raw) {
    if (const auto pred = normalize_runs(raw)) total += f1_recurse(*pred, memo);
  };
  // Removing the rightmost 1 of block i turned one of its b_i trailing zeros
  // back into a 1, splitting the zero block at every possible point.
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto [a, b] = runs[i];
    for (std::int64_t j = 0; j < b; ++j) {
      Runs raw(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(i));
      raw.emplace_back(a - 1, j);
      raw.emplace_back(1, b - 1 - j);
      raw.insert(raw.end(), runs.begin() + static_cast<std::ptrdiff_t>(i) + 1, runs.end());
      recurse(raw);
    }
  }
  // Removing the rightmost 1 of the last block with no decrement at all.
  {
    Runs raw(runs.begin(), runs.end() - 1);
    raw.emplace_back(runs.back().first - 1, runs.back().second);
    recurse(raw);
  }
  memo.emplace(runs, total);
  return total;
}

}  // namespace

Nat f1_runlength(const RunLengthWord& rl) {
  for (std::size_t i = 0; i < rl.runs.size(); ++i) {
    const auto [ones, zeros] = rl.runs[i];
    if (ones < 1) throw std::invalid_argument("run-length ones count must be >= 1");
    if (zeros < 0 || (zeros < 1 && i + 1 < rl.runs.size())) {
      throw std::invalid_argument("run-length zeros count must be >= 1 between ones blocks");
    }
  }
  std::map<Runs, Nat> memo;
  return f1_recurse(rl.runs, memo);
}

Nat interval_multiplicity(const Word& w, int k, MemoStore& memo) {
  validate_letters(w, k);
  if (!accept_interval(w, k)) return 0;
  const std::size_t n = w.size();
  if (n == 2) return 1;  // the only two-letter member is k followed by a diamond
  if (const auto hit = memo.find(k, w)) return *hit;
  Nat total = 0;
  const auto add = [&](Word pred, std::size_t i, std::size_t j, const Nat& weight) {
    pred.erase_at(j);
    pred.erase_at(i);
    total += weight * interval_multiplicity(pred, k, memo);
  };
  // The last step inserted the k at position i, the diamond at some j > i
  // (adjacent pairs arise from one ordered pick, the rest from two), then
  // decremented the first positive digit right of the diamond, skipping
  // diamonds and zeros.
  for (std::size_t i = 0; i < n; ++i) {
    if (!w[i].is_digit() || w[i].digit_value() != k) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!w[j].is_diamond()) continue;
      const Nat weight = j == i + 1 ? 1 : 2;
      bool found_positive = false;
      for (std::size_t t = j + 1; t < n; ++t) {
        if (w[t].is_diamond()) continue;
        const int d = w[t].digit_value();
        if (d == 0) {
          Word u = w;
          u[t] = Letter::digit(1);
          add(std::move(u), i, j, weight);
          continue;
        }
        if (d <= k - 1) {
          Word u = w;
          u[t] = Letter::digit(d + 1);
          add(std::move(u), i, j, weight);
        }
        found_positive = true;
        break;
      }
      if (!found_positive) add(w, i, j, weight);
    }
  }
  memo.insert(k, w, total);
  return total;
}

Nat interval_multiplicity(const Word& w, int k) {
  MemoStore memo;
  return interval_multiplicity(w, k, memo);
}

SeriesTable interval_table(int n, int k) {
  return interval_enumerate(n, k, EnumMode::collapsed);
}

}  // namespace hammersley
