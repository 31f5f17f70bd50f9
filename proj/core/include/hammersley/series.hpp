#pragma once

#include <cstddef>
#include <list>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "hammersley/bignum.hpp"
#include "hammersley/process.hpp"
#include "hammersley/word.hpp"

namespace hammersley {

using Multiplicity = Nat;
using ExactProbability = Rat;
using SeriesTable = CountTable;

// Thread-safe (k, word) -> multiplicity cache. Values are deterministic, so
// concurrent duplicate insertion is benign and readers see either absence or
// the final value. A nonzero capacity bounds the store with least-recently-
// used eviction. HAD and interval entries never collide: every memoized
// interval word contains a diamond, every memoized HAD word is plain.
class MemoStore {
 public:
  MemoStore() = default;
  explicit MemoStore(std::size_t capacity) : capacity_(capacity) {}

  std::optional<Nat> find(int k, const Word& w) const;
  void insert(int k, const Word& w, const Nat& value);
  std::size_t size() const;

 private:
  struct Key {
    int k = 0;
    Word w;

    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept {
      return WordHash{}(key.w) * 1000003u + static_cast<std::size_t>(key.k);
    }
  };
  struct Entry {
    Nat value;
    std::list<Key>::iterator order;
  };

  mutable std::mutex mutex_;
  std::size_t capacity_ = 0;  // 0 = unbounded
  mutable std::list<Key> order_;  // front = most recently used
  std::unordered_map<Key, Entry, KeyHash> entries_;
};

// F_k(w): the number of trajectories producing w, by the memoized reverse
// recursion over predecessors. Requires w plain with digits <= k.
Nat multiplicity(const Word& w, int k, MemoStore& memo);
Nat multiplicity(const Word& w, int k);

// F_k(w) / |w|!, in lowest terms.
ExactProbability probability(const Word& w, int k, MemoStore& memo);
ExactProbability probability(const Word& w, int k);

// Multiplicities of every word of length n, by forward level DP; the
// independent route against the reverse recursion. Guarded by
// kMaxCollapsedHadN.
SeriesTable series_table(int n, int k);

// F_1 by the run-length recurrence, the second independent route for k = 1.
Nat f1_runlength(const RunLengthWord& rl);

// Number of ordered pick-sequences of the interval process producing w
// (off-diagonal picks count twice). Requires digits <= k.
Nat interval_multiplicity(const Word& w, int k, MemoStore& memo);
Nat interval_multiplicity(const Word& w, int k);

// Interval multiplicities of every reachable word of 2n letters; guarded by
// kMaxCollapsedIntervalN.
SeriesTable interval_table(int n, int k);

}  // namespace hammersley
