#include <doctest.h>

#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "hammersley/word.hpp"
#include "hammersley/word_stats.hpp"

using namespace hammersley;

namespace {

Word w(const char* text) { return Word::parse(text); }

}  // namespace

TEST_CASE("parse and text round-trip, including both diamond spellings") {
  CHECK(w("212").text() == "212");
  CHECK(w("2*1*").text() == "2*1*");
  CHECK(w("2◇1◇") == w("2*1*"));
  CHECK(w("").empty());

  CHECK_THROWS_AS(Word::parse("21x"), ParseError);
  try {
    Word::parse("21x2");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("letters expose digit values and the diamond flag") {
  const Word word = w("2*0");
  CHECK(word.size() == 3);
  CHECK(word[0].digit_value() == 2);
  CHECK(word[1].is_diamond());
  CHECK_FALSE(word.is_plain());
  CHECK(w("210").is_plain());
  CHECK_THROWS_AS(Letter::diamond().digit_value(), std::logic_error);
}

TEST_CASE("insert_at and erase_at are inverse at every index") {
  const Word base = w("2102");
  for (std::size_t gap = 0; gap <= base.size(); ++gap) {
    Word edited = base;
    edited.insert_at(gap, Letter::digit(2));
    CHECK(edited.size() == base.size() + 1);
    edited.erase_at(gap);
    CHECK(edited == base);
  }
}

TEST_CASE("equal words hash equally and distinct small words spread") {
  const WordHash hash;
  CHECK(hash(w("2*1*")) == hash(Word::parse("2◇1◇")));

  std::unordered_set<std::size_t> seen;
  const std::vector<const char*> words = {"2", "21", "22", "212", "2*", "*2", "0", ""};
  for (const auto* text : words) seen.insert(hash(w(text)));
  CHECK(seen.size() == words.size());
}

TEST_CASE("run-length encoding matches the documented examples") {
  CHECK(runlength_encode(w("11010")) == RunLengthWord{{{2, 1}, {1, 1}}});
  CHECK(runlength_encode(w("1")) == RunLengthWord{{{1, 0}}});
  CHECK(runlength_encode(w("1010")) == RunLengthWord{{{1, 1}, {1, 1}}});
  CHECK(runlength_encode(w("")) == RunLengthWord{});

  CHECK(runlength_decode(RunLengthWord{{{2, 1}, {1, 1}}}) == w("11010"));
  CHECK_THROWS_AS(runlength_encode(w("01")), std::invalid_argument);
  CHECK_THROWS_AS(runlength_decode(RunLengthWord{{{0, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(runlength_decode(RunLengthWord{{{1, 0}, {1, 0}}}), std::invalid_argument);
}

TEST_CASE("letter counts, digit sums and the structural difference") {
  CHECK(letter_count(w("22200"), Letter::digit(0)) == 2);
  CHECK(letter_count(w("2*1*"), Letter::diamond()) == 2);
  CHECK(digit_sum(w("2*1*")) == 3);
  CHECK(structural_difference(w("220"), 2) == 1);
  CHECK(structural_difference(w("200"), 2) == -1);
  CHECK(structural_difference(w("31"), 3) == 0);
}

TEST_CASE("dominance report pinpoints the minimal-difference prefix") {
  CHECK(is_k_dominant(w("212"), 2));
  CHECK_FALSE(is_k_dominant(w(""), 2));

  const DominanceReport member = check_dominant(w("212"), 2);
  CHECK(member.member);
  CHECK(member.prefix_length == 3);
  CHECK(member.difference == 2);

  const DominanceReport deficit = check_dominant(w("200"), 2);
  CHECK_FALSE(deficit.member);
  CHECK(deficit.prefix_length == 3);
  CHECK(deficit.difference == -1);

  const DominanceReport touch = check_dominant(w("2020"), 2);
  CHECK_FALSE(touch.member);
  CHECK(touch.prefix_length == 2);
  CHECK(touch.difference == 0);
}

TEST_CASE("critical words have minimal structural difference one") {
  CHECK(is_critical(w("2"), 2));
  CHECK_FALSE(is_critical(w("22"), 2));
  CHECK(is_critical(w("220"), 2));
  CHECK_FALSE(is_critical(w("200"), 2));
}

TEST_CASE("increments are one plus the trailing zeros") {
  CHECK(increment_count(w("2")) == 1);
  CHECK(increment_count(w("2100")) == 3);
  CHECK(increment_count(w("21002")) == 1);
  CHECK_THROWS_AS(increment_count(w("2*")), std::invalid_argument);
}

TEST_CASE("delete_diamonds keeps digit order") {
  CHECK(delete_diamonds(w("2*1*")) == w("21"));
  CHECK(delete_diamonds(w("22**")) == w("22"));
  CHECK(delete_diamonds(w("210")) == w("210"));
}

TEST_CASE("input validation rejects oversized digits and diamonds") {
  CHECK_THROWS_AS(validate_k(0), std::invalid_argument);
  CHECK_NOTHROW(validate_k(10));  // the 0..9 bound is a text-format limit, not a library one
  CHECK_THROWS_AS(validate_plain(w("2*"), 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_plain(w("3"), 2), std::invalid_argument);
  CHECK_THROWS_AS(validate_letters(w("3*"), 2), std::invalid_argument);
  CHECK_NOTHROW(validate_letters(w("2*"), 2));
}
