#pragma once

#include <cstdint>

namespace mapf {

// splitmix64. Used everywhere seeds matter so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). bound must be nonzero.
  std::uint64_t next_below(std::uint64_t bound) {
    // Rejection sampling keeps the draw exactly uniform.
    std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  int next_int(int bound) { return static_cast<int>(next_below(static_cast<std::uint64_t>(bound))); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool next_bool(double p) { return next_double() < p; }

  // Deterministic seed derivation for independent substreams.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
    Rng r(seed);
    r.state_ ^= 0x632be59bd9b4e019ULL + a;
    r.next_u64();
    r.state_ += 0x9e3779b97f4a7c15ULL * (b + 1);
    r.next_u64();
    r.state_ ^= c * 0xff51afd7ed558ccdULL;
    return r.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace mapf
