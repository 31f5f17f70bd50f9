#include "hammersley/rng.hpp"

namespace hammersley {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int s) {
  return (x << s) | (x >> (64 - s));
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) {
  SplitMix64 mix{seed};
  for (auto& word : state_) word = mix.next();
}

std::uint64_t Xoshiro256pp::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t Xoshiro256pp::below(std::uint64_t bound) {
  // Multiply-shift with rejection of the biased low range.
  unsigned __int128 product = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(product);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      product = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(product);
    }
  }
  return static_cast<std::uint64_t>(product >> 64);
}

std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix{seed};
  const std::uint64_t a = mix.next();
  const std::uint64_t b = mix.next();
  SplitMix64 fold{a ^ (index * 0xd1342543de82ef95ULL + b)};
  return fold.next();
}

}  // namespace hammersley
