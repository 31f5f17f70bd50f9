#pragma once

#include <array>
#include <cstdint>

namespace hammersley {

// Deterministic cross-platform randomness. The standard library's
// distributions are implementation-defined, so seeded runs would not be
// reproducible across toolchains; these generators pin every bit.

// splitmix64, used for seeding and substream derivation.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ with splitmix64 state expansion.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed);

  std::uint64_t next();

  // Uniform draw on {0, ..., bound-1}; exact (rejection-corrected
  // multiply-shift). bound must be >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> state_{};
};

// Seed of the index-th independent substream of a run. Parallel sampling
// gives sample #index this substream, which makes merged results identical
// for any worker count.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace hammersley
