#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace oapoly {

// Deterministic random stream. mt19937_64 itself is pinned by the standard,
// but the <random> distributions are not, so the few draws we need are
// implemented directly on the raw 64-bit output and reproduce bit-for-bit
// on any platform.
//
// Named sub-streams let one command-line seed drive independent generator,
// witness and sampler streams without coupling their draw counts.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);
  RandomStream(std::uint64_t seed, std::string_view label);

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01();

  // Uniform in [lo, hi).
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller (second draw cached).
  double normal();

  // Uniform integer in [0, n), n >= 1.
  std::uint64_t below(std::uint64_t n);

  // Independent stream derived from this stream's seed material.
  RandomStream fork(std::string_view label);

 private:
  std::mt19937_64 gen_;
  std::uint64_t origin_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace oapoly
