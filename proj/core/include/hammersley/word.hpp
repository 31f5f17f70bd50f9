#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hammersley {

// One letter of a process word: a digit or the diamond placeholder.
// The in-memory form supports any digit value; text form is limited to 0..9.
class Letter {
 public:
  constexpr Letter() = default;

  static constexpr Letter digit(int value) {
    return value < 0 ? throw std::invalid_argument("digit value must be nonnegative")
                     : Letter(value);
  }
  static constexpr Letter diamond() { return Letter(kDiamondValue); }

  constexpr bool is_diamond() const { return value_ == kDiamondValue; }
  constexpr bool is_digit() const { return value_ >= 0; }

  // Digit value; diamonds have none.
  constexpr int digit_value() const {
    return is_diamond() ? throw std::logic_error("diamond letter has no digit value")
                        : value_;
  }

  friend constexpr bool operator==(Letter, Letter) = default;
  friend constexpr auto operator<=>(Letter, Letter) = default;

 private:
  static constexpr int kDiamondValue = -1;
  explicit constexpr Letter(int value) : value_(value) {}

  int value_ = 0;
};

// Raised by text parsing with the 0-based byte offset of the bad input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_ = 0;
};

// A finite sequence of letters. "Plain" means diamond-free.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  // Accepts digits '0'..'9' and the diamond as '*' or UTF-8 "◇".
  static Word parse(std::string_view text);

  // Text form: digits '0'..'9', diamond as '*'. Digit values above 9 have no
  // single-character encoding and are rejected.
  std::string text() const;

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter& operator[](std::size_t i) { return letters_[i]; }

  const std::vector<Letter>& letters() const { return letters_; }

  bool is_plain() const {
    return std::none_of(letters_.begin(), letters_.end(),
                        [](Letter l) { return l.is_diamond(); });
  }

  void push_back(Letter l) { letters_.push_back(l); }
  void insert_at(std::size_t index, Letter l) {
    letters_.insert(letters_.begin() + static_cast<std::ptrdiff_t>(index), l);
  }
  void erase_at(std::size_t index) {
    letters_.erase(letters_.begin() + static_cast<std::ptrdiff_t>(index));
  }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return std::lexicographical_compare_three_way(
        a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (Letter l : w) {
      std::uint64_t v =
          l.is_diamond() ? 0xffffffffULL : static_cast<std::uint64_t>(l.digit_value());
      h = (h ^ v) * 0x100000001b3ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Run-length form 1^{a_1} 0^{b_1} ... 1^{a_s} 0^{b_s} of a binary word.
// Invariants: a_i >= 1 for all i; b_i >= 1 for i < s; b_s >= 0.
struct RunLengthWord {
  std::vector<std::pair<std::int64_t, std::int64_t>> runs;

  friend bool operator==(const RunLengthWord&, const RunLengthWord&) = default;
};

// Encodes a word over {0,1}. Words starting with 0 have no run-length form
// and are rejected; the empty word encodes to an empty run list.
RunLengthWord runlength_encode(const Word& w);

// Decodes after validating the RunLengthWord invariants.
Word runlength_decode(const RunLengthWord& rl);

}  // namespace hammersley
