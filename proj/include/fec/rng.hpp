#pragma once

#include <array>
#include <cstdint>

namespace fec {

// xoshiro256++ seeded through SplitMix64. The standard library engines are
// portable but its distributions are not, so uniform and Gaussian draws are
// generated here from explicit bit-level recipes. The algorithm is part of
// the reproducibility contract: identical seeds give identical channel
// realizations in every build, and CSV outputs stay comparable over time.
//
// Streams: Rng::mix(a, b) derives a child seed from a parent seed and an
// index. Worker, block, and point streams are all derived this way, so any
// partition of the work over threads sees the same per-block randomness.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on (0, 1]; never returns 0, safe under log().
  double next_unit();

  // Standard normal via Box-Muller on next_unit() pairs.
  double next_gaussian();

  // Returns true with probability p (p in [0, 1]).
  bool next_bernoulli(double p) { return next_unit() <= p; }

  int next_bit() { return static_cast<int>(next_u64() >> 63); }

  static std::uint64_t splitmix64(std::uint64_t& state);
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t index);

 private:
  std::array<std::uint64_t, 4> s_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fec
