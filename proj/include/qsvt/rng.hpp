#pragma once

#include <cstdint>
#include <random>

namespace qsvt {

// SplitMix64 step (Vigna); used only to derive stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Stream tags; every subsystem draws from its own stream so that trials can
// run in any order (or in parallel) without changing results.
namespace stream {
constexpr std::uint64_t kSketchRows = 0x11;
constexpr std::uint64_t kSketchCols = 0x12;
constexpr std::uint64_t kEstimator = 0x21;
constexpr std::uint64_t kSampler = 0x31;
constexpr std::uint64_t kInstance = 0x41;
constexpr std::uint64_t kTrial = 0x51;
constexpr std::uint64_t kValidate = 0x61;
}  // namespace stream

/// Deterministic RNG stream identified by (master seed, tag, index).
/// The same triple always yields the same sequence regardless of when the
/// stream is created. Seed derivation: three chained SplitMix64 steps mixing
/// in the tag and index, keying a mt19937_64 engine.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master, std::uint64_t tag = 0,
                     std::uint64_t index = 0) {
    std::uint64_t s = master;
    std::uint64_t a = splitmix64(s);
    s ^= tag * 0x9e3779b97f4a7c15ull;
    a ^= splitmix64(s);
    s ^= index * 0xc2b2ae3d27d4eb4full;
    a ^= splitmix64(s);
    seed_ = a;
    gen_.seed(a);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound), bound > 0. Unbiased (rejection).
  std::uint64_t uniform_int(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = gen_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  /// Derive a child stream rooted at this stream's seed.
  RngStream split(std::uint64_t tag, std::uint64_t index = 0) const {
    return RngStream(seed_, tag, index);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_ = 0;
  std::mt19937_64 gen_;
};

}  // namespace qsvt
