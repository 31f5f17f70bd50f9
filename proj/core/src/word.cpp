#include "hammersley/word.hpp"

namespace hammersley {

Word Word::parse(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      letters.push_back(Letter::digit(c - '0'));
      ++i;
    } else if (c == '*') {
      letters.push_back(Letter::diamond());
      ++i;
    } else if (text.substr(i, 3) == "\xe2\x97\x87") {  // UTF-8 diamond
      letters.push_back(Letter::diamond());
      i += 3;
    } else {
      throw ParseError("unexpected character '" + std::string(1, c) + "' at position " +
                           std::to_string(i),
                       i);
    }
  }
  return Word(std::move(letters));
}

std::string Word::text() const {
  std::string out;
  out.reserve(size());
  for (Letter l : letters_) {
    if (l.is_diamond()) {
      out.push_back('*');
    } else if (l.digit_value() <= 9) {
      out.push_back(static_cast<char>('0' + l.digit_value()));
    } else {
      throw std::invalid_argument("digit value " + std::to_string(l.digit_value()) +
                                  " has no single-character text form");
    }
  }
  return out;
}

RunLengthWord runlength_encode(const Word& w) {
  for (Letter l : w) {
    if (!l.is_digit() || l.digit_value() > 1) {
      throw std::invalid_argument("run-length encoding requires a word over {0,1}");
    }
  }
  if (!w.empty() && w[0].digit_value() == 0) {
    throw std::invalid_argument("words starting with 0 have no run-length form");
  }
  RunLengthWord rl;
  std::size_t i = 0;
  while (i < w.size()) {
    std::int64_t ones = 0;
    while (i < w.size() && w[i].digit_value() == 1) {
      ++ones;
      ++i;
    }
    std::int64_t zeros = 0;
    while (i < w.size() && w[i].digit_value() == 0) {
      ++zeros;
      ++i;
    }
    rl.runs.emplace_back(ones, zeros);
  }
  return rl;
}

Word runlength_decode(const RunLengthWord& rl) {
  Word out;
  for (std::size_t i = 0; i < rl.runs.size(); ++i) {
    const auto [ones, zeros] = rl.runs[i];
    const bool last = i + 1 == rl.runs.size();
    if (ones < 1 || zeros < 0 || (!last && zeros < 1)) {
      throw std::invalid_argument("invalid run-length word at block " + std::to_string(i + 1));
    }
    for (std::int64_t j = 0; j < ones; ++j) out.push_back(Letter::digit(1));
    for (std::int64_t j = 0; j < zeros; ++j) out.push_back(Letter::digit(0));
  }
  return out;
}

}  // namespace hammersley
