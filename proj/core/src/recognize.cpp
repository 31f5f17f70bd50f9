#include "hammersley/recognize.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hammersley/word_stats.hpp"
#include "reverse_steps.hpp"

namespace hammersley {

bool accept_dominant(const Word& w, int k) { return is_k_dominant(w, k); }

PdaRun pda_run(const Word& w, int k) {
  validate_plain(w, k);
  PdaRun run;
  run.trace.reserve(w.size());
  std::int64_t counter = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int d = w[i].digit_value();
    if (i == 0 && d != k) {
      run.trace.push_back({counter, true});
      run.rejected_at = 1;
      return run;
    }
    if (d == k) {
      ++counter;
    } else if (d <= k - 2) {
      counter -= k - 1 - d;
    }
    const bool fatal = counter <= 0;
    run.trace.push_back({counter, fatal});
    if (fatal) {
      run.rejected_at = i + 1;
      return run;
    }
  }
  run.accepted = !w.empty() && counter >= 1;
  return run;
}

IntervalReport check_interval(const Word& w, int k) {
  validate_k(k);
  validate_letters(w, k);
  IntervalReport report;
  const std::size_t diamonds = letter_count(w, Letter::diamond());
  if (w.empty() || 2 * diamonds != w.size()) {
    report.failure = IntervalReport::Failure::condition_1;
    return report;
  }
  std::size_t seen_diamonds = 0;
  std::int64_t seen_sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_diamond()) {
      ++seen_diamonds;
    } else {
      seen_sum += w[i].digit_value();
    }
    const auto length = static_cast<std::int64_t>(i + 1);
    if (2 * static_cast<std::int64_t>(seen_diamonds) > length) {
      report.failure = IntervalReport::Failure::condition_2a;
      report.prefix_length = i + 1;
      return report;
    }
    if (seen_sum + static_cast<std::int64_t>(k + 1) * static_cast<std::int64_t>(seen_diamonds) <
        static_cast<std::int64_t>(k) * length) {
      report.failure = IntervalReport::Failure::condition_2b;
      report.prefix_length = i + 1;
      return report;
    }
  }
  report.member = true;
  return report;
}

bool accept_interval(const Word& w, int k) { return check_interval(w, k).member; }

bool accept_effective(const Word& w, int k) { return is_k_dominant(w, k); }

std::optional<SkDecomposition> sk_decompose(const Word& w, int k) {
  validate_k(k);
  validate_letters(w, k);
  if (w.empty()) return std::nullopt;
  const Letter high = Letter::digit(k);
  const Letter low = Letter::digit(k - 1);
  const Letter diamond = Letter::diamond();
  std::size_t pos = 0;
  const auto take = [&](Letter a) {
    std::int64_t count = 0;
    while (pos < w.size() && w[pos] == a) {
      ++pos;
      ++count;
    }
    return count;
  };
  const std::int64_t alpha = take(high);
  const std::int64_t beta = take(diamond);
  const std::int64_t gamma = take(low);
  const std::int64_t delta = take(diamond);
  if (pos != w.size()) return std::nullopt;
  // alpha = c+d+e, beta = c+e, gamma = c, delta = c+d.
  const SkDecomposition sol{gamma, delta - gamma, beta - gamma};
  if (sol.d < 0 || sol.e < 0 || alpha != sol.c + sol.d + sol.e) return std::nullopt;
  return sol;
}

Trajectory witness_trajectory(const Word& w, int k) {
  if (!is_k_dominant(w, k)) {
    throw std::invalid_argument("witness requires a dominant word, got \"" + w.text() + "\"");
  }
  std::vector<std::uint32_t> gaps(w.size());
  Word current = w;
  while (current.size() > 1) {
    bool found = false;
    for (auto& [pred, gap] : detail::reverse_candidates(current, k)) {
      if (!is_k_dominant(pred, k)) continue;
      gaps[current.size() - 1] = gap;
      current = std::move(pred);
      found = true;
      break;
    }
    // Every dominant word has a dominant predecessor; reaching this line
    // would mean the dominance test and the reverse step disagree.
    if (!found) {
      throw std::logic_error("no dominant predecessor for \"" + current.text() + "\"");
    }
  }
  gaps[0] = 0;
  return Trajectory{std::move(gaps)};
}

}  // namespace hammersley
