#pragma once

#include <cstddef>
#include <cstdint>

#include "hammersley/word.hpp"

namespace hammersley {

// Throws std::invalid_argument unless k >= 1.
void validate_k(int k);

// Throws std::invalid_argument if w contains a diamond or a digit > k.
void validate_plain(const Word& w, int k);

// Throws std::invalid_argument if any digit exceeds k (diamonds allowed).
void validate_letters(const Word& w, int k);

// Number of occurrences of a in w.
std::size_t letter_count(const Word& w, Letter a);

// Sum of digit values; diamonds contribute 0.
std::int64_t digit_sum(const Word& w);

// |z|_k - sum_{i=0}^{k-2} (k-i-1) |z|_i. For k = 1 the sum is empty and the
// value is |z|_1. Requires z plain with digits <= k.
std::int64_t structural_difference(const Word& z, int k);

// True iff every non-empty prefix has strictly positive structural
// difference. The empty word is not dominant.
bool is_k_dominant(const Word& w, int k);

// Dominance verdict with evidence: for non-members, the shortest prefix
// attaining the minimal structural difference; for members, the full word
// and its difference.
struct DominanceReport {
  bool member = false;
  std::size_t prefix_length = 0;
  std::int64_t difference = 0;
};
DominanceReport check_dominant(const Word& w, int k);

// 1 + length of the maximal trailing block of zeros. Requires w plain and
// non-empty.
std::size_t increment_count(const Word& w);

// w with every diamond removed, digit order preserved.
Word delete_diamonds(const Word& w);

// True iff w is k-dominant with full-word structural difference exactly 1.
bool is_critical(const Word& w, int k);

}  // namespace hammersley
