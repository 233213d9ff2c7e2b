#pragma once

#include <cstdint>
#include <random>

namespace amisim {

// Deterministic generator used everywhere randomness is needed. mt19937_64
// output is pinned by the standard and the uniform mapping below avoids the
// implementation-defined std::uniform_real_distribution, so identical seeds
// give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 gen_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Per-drop seeds: the drop index and a stream tag are mixed into the base
// seed so sweeps are reproducible drop by drop and independent random
// quantities within a drop do not share a stream.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t drop_index,
                       std::uint64_t stream);

inline constexpr std::uint64_t kStreamTopology = 0;
inline constexpr std::uint64_t kStreamQos = 1;

}  // namespace amisim
