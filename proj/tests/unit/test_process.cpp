#include <doctest.h>

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hammersley/bignum.hpp"
#include "hammersley/process.hpp"
#include "hammersley/word_stats.hpp"

using namespace hammersley;

namespace {

Word w(const char* text) { return Word::parse(text); }

Trajectory gaps(std::initializer_list<std::uint32_t> list) { return Trajectory{list}; }

}  // namespace

TEST_CASE("had_step inserts k and decrements the first positive digit right") {
  CHECK(had_step(w(""), 2, 0) == w("2"));
  CHECK(had_step(w("22"), 2, 0) == w("212"));
  CHECK(had_step(w("22"), 2, 2) == w("222"));
  CHECK(had_step(w("202"), 2, 0) == w("2102"));
  // Zeros between the insertion and the decremented digit are skipped.
  CHECK(had_step(w("02"), 2, 0) == w("201"));
  CHECK(had_step(w("20"), 2, 1) == w("220"));
  CHECK_THROWS_AS(had_step(w("2"), 2, 2), std::invalid_argument);
}

TEST_CASE("had_replay folds the step over a whole trajectory") {
  CHECK(had_replay(gaps({0}), 2) == w("2"));
  CHECK(had_replay(gaps({0, 1, 2}), 2) == w("222"));
  CHECK(had_replay(gaps({0, 0, 0}), 2) == w("211"));
  CHECK(had_replay(gaps({0, 0, 0}), 1) == w("100"));
  CHECK_THROWS_AS(had_replay(gaps({0, 2}), 2), std::invalid_argument);
}

TEST_CASE("sampled trajectories are deterministic and replay to had_sample") {
  const Trajectory a = sample_trajectory(40, 97);
  const Trajectory b = sample_trajectory(40, 97);
  CHECK(a == b);
  CHECK(sample_trajectory(40, 98).gaps != a.gaps);
  for (std::size_t m = 0; m < a.gaps.size(); ++m) CHECK(a.gaps[m] <= m);

  for (const std::uint64_t seed : {1ULL, 7ULL, 271828ULL}) {
    for (const int k : {1, 2, 3}) {
      CHECK(had_sample(40, k, seed) == had_replay(sample_trajectory(40, seed), k));
    }
  }
}

TEST_CASE("collapsed and literal HAD enumeration agree at small n") {
  for (const int k : {1, 2}) {
    for (int n = 1; n <= 6; ++n) {
      const EnumerationTable dp = had_enumerate(n, k, EnumMode::collapsed);
      const EnumerationTable walk = had_enumerate(n, k, EnumMode::literal);
      CHECK(dp.counts == walk.counts);
      CHECK(dp.total_mass() == factorial(n));
    }
  }
  CHECK_THROWS_AS(had_enumerate(kMaxLiteralHadN + 1, 2, EnumMode::literal),
                  std::invalid_argument);
  CHECK_THROWS_AS(had_enumerate(kMaxCollapsedHadN + 1, 2), std::invalid_argument);
}

TEST_CASE("interval_step places the diamond strictly right of the new k") {
  CHECK(interval_step(w(""), 2, 0, 0) == w("2*"));
  // Pick (0,0) lands the diamond right before the old 2, which gets
  // decremented; pick (2,2) leaves everything untouched; the rest collide
  // on 22** (7 of the 9 ordered picks).
  CHECK(interval_step(w("2*"), 2, 0, 0) == w("2*1*"));
  CHECK(interval_step(w("2*"), 2, 2, 2) == w("2*2*"));
  CHECK(interval_step(w("2*"), 2, 0, 1) == w("22**"));
  CHECK(interval_step(w("2*"), 2, 2, 0) == w("22**"));
  CHECK(interval_step(w("2*"), 2, 1, 1) == w("22**"));
  CHECK_THROWS_AS(interval_step(w("2*"), 2, 3, 0), std::invalid_argument);
}

TEST_CASE("interval_replay matches the batch interval sampler") {
  CHECK(interval_replay(IntervalTrajectory{{{0, 0}}}, 2) == w("2*"));
  for (const std::uint64_t seed : {1ULL, 7ULL, 271828ULL}) {
    for (const int k : {1, 2, 3}) {
      CHECK(interval_sample(30, k, seed) ==
            interval_replay(sample_interval_trajectory(30, seed), k));
    }
  }
}

TEST_CASE("interval enumeration masses are squared odd double factorials") {
  const std::array<Nat, 4> masses = {Nat(1), Nat(9), Nat(225), Nat(11025)};
  for (int n = 1; n <= 4; ++n) {
    const EnumerationTable dp = interval_enumerate(n, 2, EnumMode::collapsed);
    CHECK(dp.total_mass() == masses[static_cast<std::size_t>(n - 1)]);
    CHECK(dp.total_mass() == interval_mass(n));
  }
  for (int n = 1; n <= 3; ++n) {
    const EnumerationTable dp = interval_enumerate(n, 2, EnumMode::collapsed);
    const EnumerationTable walk = interval_enumerate(n, 2, EnumMode::literal);
    CHECK(dp.counts == walk.counts);
  }
  CHECK_THROWS_AS(interval_enumerate(kMaxCollapsedIntervalN + 1, 2), std::invalid_argument);
}

TEST_CASE("interval word counts per level match the collapsed table sizes") {
  const std::array<std::size_t, 6> sizes = {1, 3, 14, 79, 509, 3591};
  for (int n = 1; n <= 6; ++n) {
    CHECK(interval_enumerate(n, 2).counts.size() == sizes[static_cast<std::size_t>(n - 1)]);
  }
}

TEST_CASE("encode_values reproduces the particle bookkeeping") {
  const std::array<double, 3> first = {0.62, 0.21, 0.55};
  CHECK(encode_values(first, 2) == w("220"));
  const std::array<double, 4> second = {0.3, 0.7, 0.5, 0.1};
  CHECK(encode_values(second, 2) == w("2121"));
  const std::array<double, 5> third = {5, 1, 4, 2, 3};
  CHECK(encode_values(third, 2) == w("22200"));
  const std::array<double, 3> ascending = {1, 2, 3};
  CHECK(encode_values(ascending, 2) == w("222"));
  const std::array<double, 2> repeated = {1, 1};
  CHECK_THROWS_AS(encode_values(repeated, 2), std::invalid_argument);
}

TEST_CASE("every sampled word is dominant") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    CHECK(is_k_dominant(had_sample(25, 2, seed), 2));
  }
}
