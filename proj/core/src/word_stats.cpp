#include "hammersley/word_stats.hpp"

#include <stdexcept>
#include <string>

namespace hammersley {

void validate_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1, got " + std::to_string(k));
}

void validate_plain(const Word& w, int k) {
  validate_k(k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_diamond()) {
      throw std::invalid_argument("plain word expected, diamond at position " +
                                  std::to_string(i + 1));
    }
    if (w[i].digit_value() > k) {
      throw std::invalid_argument("digit " + std::to_string(w[i].digit_value()) +
                                  " exceeds alphabet bound k=" + std::to_string(k));
    }
  }
}

void validate_letters(const Word& w, int k) {
  validate_k(k);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_digit() && w[i].digit_value() > k) {
      throw std::invalid_argument("digit " + std::to_string(w[i].digit_value()) +
                                  " exceeds alphabet bound k=" + std::to_string(k));
    }
  }
}

std::size_t letter_count(const Word& w, Letter a) {
  std::size_t count = 0;
  for (Letter l : w) count += (l == a) ? 1 : 0;
  return count;
}

std::int64_t digit_sum(const Word& w) {
  std::int64_t sum = 0;
  for (Letter l : w) {
    if (l.is_digit()) sum += l.digit_value();
  }
  return sum;
}

namespace {

// Contribution of one letter to the structural difference.
std::int64_t difference_step(Letter l, int k) {
  const int v = l.digit_value();
  if (v == k) return 1;
  if (v <= k - 2) return -static_cast<std::int64_t>(k - 1 - v);
  return 0;  // v == k-1
}

}  // namespace

std::int64_t structural_difference(const Word& z, int k) {
  validate_plain(z, k);
  std::int64_t diff = 0;
  for (Letter l : z) diff += difference_step(l, k);
  return diff;
}

bool is_k_dominant(const Word& w, int k) {
  return check_dominant(w, k).member;
}

DominanceReport check_dominant(const Word& w, int k) {
  validate_plain(w, k);
  if (w.empty()) return {false, 0, 0};
  std::int64_t diff = 0;
  std::int64_t min_diff = 0;
  std::size_t min_at = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    diff += difference_step(w[i], k);
    if (min_at == 0 || diff < min_diff) {
      min_diff = diff;
      min_at = i + 1;
    }
  }
  if (min_diff <= 0) return {false, min_at, min_diff};
  return {true, w.size(), diff};
}

std::size_t increment_count(const Word& w) {
  if (w.empty()) throw std::invalid_argument("increment count of the empty word");
  for (Letter l : w) {
    if (l.is_diamond()) throw std::invalid_argument("increment count expects a plain word");
  }
  std::size_t zeros = 0;
  for (std::size_t i = w.size(); i-- > 0 && w[i].digit_value() == 0;) ++zeros;
  return 1 + zeros;
}

Word delete_diamonds(const Word& w) {
  Word out;
  for (Letter l : w) {
    if (!l.is_diamond()) out.push_back(l);
  }
  return out;
}

bool is_critical(const Word& w, int k) {
  const DominanceReport report = check_dominant(w, k);
  return report.member && report.difference == 1;
}

}  // namespace hammersley
