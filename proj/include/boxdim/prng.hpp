#pragma once

#include <cstdint>

namespace boxdim {

// SplitMix64. The state advances by the golden-ratio increment and the
// output is the finalized state. Every seeded random choice in the project
// flows through this generator so corpora reproduce across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  // True with probability p. Compares the top 53 bits of the draw against
  // floor(p * 2^53), so p = 0 never fires and p = 1 always does.
  bool next_bernoulli(double p) {
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
    return (next() >> 11) < threshold;
  }
};

}  // namespace boxdim
