#pragma once

#include <cmath>
#include <initializer_list>
#include <vector>

#include "fourier_cs/common.hpp"

namespace fcs {

// Self-contained deterministic RNG (xoshiro256** seeded via splitmix64).
// std::random distributions are implementation-defined, so everything the
// experiment outputs depend on is sampled here, byte-for-byte reproducible.

inline u64 splitmix64(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Derives an independent stream seed from a master seed and a path of tags.
inline u64 derive_seed(u64 master, std::initializer_list<u64> path) {
  u64 s = master;
  u64 out = splitmix64(s);
  for (u64 tag : path) {
    s ^= 0x6a09e667f3bcc909ull + tag;
    out = splitmix64(s);
  }
  return out;
}

class Rng {
 public:
  explicit Rng(u64 seed) {
    for (auto& word : s_) word = splitmix64(seed);
  }

  u64 next_u64() {
    u64 result = rotl(s_[1] * 5, 7) * 9;
    u64 t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Unbiased integer in [0, n) by rejection.
  u64 bounded(u64 n) {
    if (n == 0) throw std::invalid_argument("Rng::bounded: n must be positive");
    u64 threshold = (0 - n) % n;
    for (;;) {
      u64 r = next_u64();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (consumes two uniforms per call).
  double gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 == 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  /// Circularly-symmetric complex normal with E|z|^2 = 1.
  cplx complex_gaussian() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 == 0.0) u1 = uniform();
    double r = std::sqrt(-std::log(u1));  // sqrt(-2 log u) / sqrt(2)
    return {r * std::cos(kTwoPi * u2), r * std::sin(kTwoPi * u2)};
  }

  /// Unit-modulus complex number with uniform phase.
  cplx unit_modulus() { return std::polar(1.0, kTwoPi * uniform()); }

  /// k distinct values from [0, n), sorted ascending (Floyd's algorithm).
  std::vector<u64> sample_distinct(u64 n, std::size_t k);

 private:
  static u64 rotl(u64 x, int s) { return (x << s) | (x >> (64 - s)); }
  u64 s_[4];
};

}  // namespace fcs
