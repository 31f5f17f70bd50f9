#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hammersley/word.hpp"

namespace hammersley::detail {

// Predecessors of w under one reverse step, as (word, insertion gap) pairs.
// Only the rightmost k of a k-block can be the inserted letter: a k directly
// right of the insertion would have been decremented. With the zeros-run
// bound r = min{l >= 1 : i+l == n or w[i+l] != 0}, the undone decrement
// target is either a former 1 inside the zero run (set it back), the first
// letter after the run (raise it by one, impossible if it is k), or absent
// when the run reaches the end of the word.
inline std::vector<std::pair<Word, std::uint32_t>> reverse_candidates(const Word& w, int k) {
  std::vector<std::pair<Word, std::uint32_t>> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i].digit_value() != k) continue;
    if (i + 1 < n && w[i + 1].digit_value() == k) continue;
    std::size_t r = 1;
    while (i + r < n && w[i + r].digit_value() == 0) ++r;
    Word base = w;
    base.erase_at(i);
    for (std::size_t j = 1; j < r; ++j) {
      Word u = base;
      u[i + j - 1] = Letter::digit(1);
      out.emplace_back(std::move(u), static_cast<std::uint32_t>(i));
    }
    if (i + r < n && w[i + r].digit_value() != k) {
      Word u = base;
      u[i + r - 1] = Letter::digit(w[i + r].digit_value() + 1);
      out.emplace_back(std::move(u), static_cast<std::uint32_t>(i));
    }
    if (i + r == n) {
      out.emplace_back(std::move(base), static_cast<std::uint32_t>(i));
    }
  }
  return out;
}

}  // namespace hammersley::detail
