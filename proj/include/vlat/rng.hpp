#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vlat/scalar.hpp"

namespace vlat {

/// SplitMix64 (Steele, Lea, Flood 2014). The whole state is one 64-bit word,
/// so instance streams are reproducible across implementations:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform integer in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;

  /// Uniform double in [0, 1) from the top 53 bits.
  double unit() noexcept;

  /// Rational p/q with p in [1, max_num], q in [1, max_den].
  Scalar positive_rational(std::uint64_t max_num = 9, std::uint64_t max_den = 9) noexcept;

  template <typename T>
  void shuffle(std::vector<T>& items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Mixes a tag into a seed so that independent streams derived from one
/// user seed do not overlap.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept;

}  // namespace vlat
