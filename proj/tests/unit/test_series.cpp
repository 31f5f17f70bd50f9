#include <doctest.h>

#include <map>
#include <stdexcept>
#include <string>

#include "hammersley/bignum.hpp"
#include "hammersley/process.hpp"
#include "hammersley/series.hpp"
#include "hammersley/word_stats.hpp"

using namespace hammersley;

namespace {

Word w(const char* text) { return Word::parse(text); }

Nat f(const char* text, int k) { return multiplicity(w(text), k); }

}  // namespace

TEST_CASE("binary multiplicities match the tabulated leading coefficients") {
  const std::map<std::string, int> table = {
      {"1", 1},    {"10", 1},   {"11", 1},   {"100", 1},  {"101", 2},
      {"110", 2},  {"111", 1},  {"1000", 1}, {"1001", 3}, {"1010", 5},
      {"1011", 3}, {"1100", 5}, {"1101", 3}, {"1110", 3}, {"1111", 1}};
  for (const auto& [text, value] : table) {
    CHECK_MESSAGE(f(text.c_str(), 1) == Nat(value), "word ", text);
  }
}

TEST_CASE("ternary multiplicities match the tabulated leading coefficients") {
  const std::map<std::string, int> table = {
      {"2", 1},    {"21", 1},   {"22", 1},   {"211", 1},  {"212", 2},  {"220", 1},
      {"221", 1},  {"222", 1},  {"2111", 1}, {"2112", 3}, {"2120", 2}, {"2121", 3},
      {"2122", 3}, {"2201", 1}, {"2202", 3}, {"2210", 1}, {"2211", 1}, {"2212", 2},
      {"2220", 2}, {"2221", 1}, {"2222", 1}};
  for (const auto& [text, value] : table) {
    CHECK_MESSAGE(f(text.c_str(), 2) == Nat(value), "word ", text);
  }
}

TEST_CASE("non-dominant words have multiplicity zero") {
  CHECK(f("200", 2) == 0);
  CHECK(f("2020", 2) == 0);
  CHECK(f("0", 1) == 0);
  CHECK(f("11010", 1) > 0);
}

TEST_CASE("the trailing-run branch of the reverse recursion") {
  CHECK(f("222200", 2) == 8);
  CHECK(f("222200", 2) == f("22210", 2) + f("22201", 2) + f("22200", 2));
  CHECK(f("22210", 2) == 2);
  CHECK(f("22201", 2) == 4);
  CHECK(f("22200", 2) == 2);
}

TEST_CASE("probability divides by the trajectory mass") {
  CHECK(probability(w("212"), 2) == Rat(1, 3));
  CHECK(probability(w("1010"), 1) == Rat(5, 24));
  CHECK(fraction(Rat(5, 24)) == "5/24");
}

TEST_CASE("series_table sums to n! and matches the reverse recursion") {
  MemoStore memo;
  for (const int k : {1, 2}) {
    for (int n = 1; n <= 7; ++n) {
      const SeriesTable table = series_table(n, k);
      CHECK(table.total_mass() == factorial(n));
      for (const auto& [word, count] : table.counts) {
        CHECK(multiplicity(word, k, memo) == count);
      }
    }
  }
}

TEST_CASE("memo store caches, evicts in LRU order, and keeps values") {
  MemoStore memo(2);
  memo.insert(2, w("21"), Nat(1));
  memo.insert(2, w("22"), Nat(1));
  CHECK(memo.size() == 2);
  CHECK(memo.find(2, w("21")).has_value());  // refreshes 21
  memo.insert(2, w("212"), Nat(2));          // evicts 22
  CHECK(memo.size() == 2);
  CHECK_FALSE(memo.find(2, w("22")).has_value());
  CHECK(memo.find(2, w("21")) == Nat(1));
  CHECK(memo.find(2, w("212")) == Nat(2));

  MemoStore unbounded;
  CHECK(multiplicity(w("222200"), 2, unbounded) == 8);
  CHECK(unbounded.size() > 0);
  CHECK(multiplicity(w("222200"), 2, unbounded) == 8);
}

TEST_CASE("the run-length recurrence reproduces the binary series") {
  CHECK(f1_runlength(runlength_encode(w("1"))) == 1);
  CHECK(f1_runlength(runlength_encode(w("110"))) == 2);
  CHECK(f1_runlength(runlength_encode(w("1010"))) == 5);
  CHECK(f1_runlength(runlength_encode(w("1100"))) == 5);

  for (int n = 1; n <= 8; ++n) {
    const SeriesTable table = series_table(n, 1);
    for (const auto& [word, count] : table.counts) {
      CHECK(f1_runlength(runlength_encode(word)) == count);
    }
  }

  CHECK_THROWS_AS(f1_runlength(RunLengthWord{{{0, 1}}}), std::invalid_argument);
}

TEST_CASE("interval multiplicities match hand-counted pick sequences") {
  CHECK(interval_multiplicity(w("2*"), 2) == 1);
  CHECK(interval_multiplicity(w("2*1*"), 2) == 1);
  CHECK(interval_multiplicity(w("2*2*"), 2) == 1);
  CHECK(interval_multiplicity(w("22**"), 2) == 7);
  CHECK(interval_multiplicity(w("21**"), 2) == 0);
  CHECK(interval_multiplicity(w(""), 2) == 0);
}

TEST_CASE("the pair recursion agrees with the forward interval DP") {
  MemoStore memo;
  for (const int k : {1, 2}) {
    for (int n = 1; n <= 4; ++n) {
      const SeriesTable table = interval_table(n, k);
      CHECK(table.total_mass() == interval_mass(n));
      for (const auto& [word, count] : table.counts) {
        CHECK(interval_multiplicity(word, k, memo) == count);
      }
    }
  }
}
