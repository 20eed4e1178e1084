#ifndef KEXTREMAL_RNG_HPP
#define KEXTREMAL_RNG_HPP

#include <cstdint>
#include <random>

namespace kextremal {

// SplitMix64 step; used only to derive well-mixed substream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Deterministic substream seed for a given (seed, block) pair. Blocks of
// fixed size own disjoint substreams, so batch output does not depend on
// how blocks are scheduled across workers.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t block) {
  std::uint64_t s = seed;
  (void)splitmix64(s);
  s ^= 0xD1B54A32D192ED03ULL * (block + 1);
  return splitmix64(s);
}

// Per-block uniform source on the open interval (0,1). mt19937_64 output
// is pinned by the standard, so sequences are reproducible across
// platforms. Draws that would land exactly on 0 are rejected; 1 is not
// representable at 53-bit resolution.
class Substream {
 public:
  Substream(std::uint64_t seed, std::uint64_t block)
      : engine_(substream_seed(seed, block)) {}

  double uniform01() {
    for (;;) {
      const double u =
          static_cast<double>(engine_() >> 11) * 0x1.0p-53;
      if (u > 0.0) return u;
    }
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kextremal

#endif
