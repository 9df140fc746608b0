#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace aip {

// Deterministic counter-derived random streams (xoshiro256++ seeded via
// splitmix64).  Streams derived from (master seed, path...) are independent
// and reproducible across platforms, which keeps parallel runs bit-stable:
// every particle/step/phase owns its own stream regardless of scheduling.
class RngStream {
 public:
  explicit RngStream(uint64_t seed) { seed_from(seed); }

  static uint64_t mix(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static RngStream derive(uint64_t master, std::initializer_list<uint64_t> path) {
    uint64_t h = mix(master);
    for (uint64_t p : path) h = mix(h ^ mix(p));
    return RngStream(h);
  }

  uint64_t next_u64() {
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform on (0, 1)
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // standard normal via Box-Muller (cosine branch only, stateless)
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  // integer in [0, n), unbiased
  int uniform_int(int n) {
    const uint64_t bound = static_cast<uint64_t>(n);
    const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return static_cast<int>(x % bound);
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  void seed_from(uint64_t seed) {
    uint64_t z = seed;
    for (auto& w : s_) {
      z = mix(z);
      w = z;
    }
    // avoid the all-zero state
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9e3779b97f4a7c15ULL;
  }

  std::array<uint64_t, 4> s_{};
};

}  // namespace aip
