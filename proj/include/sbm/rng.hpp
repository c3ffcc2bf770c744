#pragma once

#include <cmath>
#include <cstdint>

namespace sbm {

// SplitMix64 finalizer. Bijective on 64-bit words, so distinct inputs give
// distinct outputs; used to expand seeds and to derive substream keys.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// xoshiro256++ (Blackman & Vigna). Every random draw in this library goes
// through this generator, with uniform doubles built from the top 53 bits,
// so identical seeds give bit-identical streams on any platform.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) {
      sm += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = sm;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
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

  // Uniform in [0, 1), 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe as a log argument.
  double uniform01_open_low() { return 1.0 - uniform01(); }

  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform01_open_low()));
    const double theta = 2.0 * M_PI * uniform01();
    cached_ = r * std::sin(theta);
    have_cached_ = true;
    return r * std::cos(theta);
  }

  // +1 or -1 with equal probability.
  double rademacher() { return (next() >> 63) ? 1.0 : -1.0; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
  double cached_ = 0.0;
  bool have_cached_ = false;
};

// Deterministic substream derivation: distinct tags give distinct generator
// seeds for the same base seed, so parallel producers never share a stream.
inline Xoshiro256pp substream(std::uint64_t seed, std::uint64_t tag) {
  return Xoshiro256pp(mix64(seed ^ mix64(tag)));
}

// Tag namespaces keep substreams disjoint when several consumers derive
// from the same user-facing seed.
namespace stream_tag {
inline constexpr std::uint64_t kSampler = 1ULL << 56;
inline constexpr std::uint64_t kLanczos = 2ULL << 56;
inline constexpr std::uint64_t kTraceProbe = 3ULL << 56;
inline constexpr std::uint64_t kKMeans = 4ULL << 56;
}  // namespace stream_tag

}  // namespace sbm
