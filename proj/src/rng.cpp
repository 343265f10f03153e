#include "vlat/rng.hpp"

namespace vlat {

std::uint64_t SplitMix64::next() noexcept {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    const std::uint64_t v = next();
    if (v < limit) return v % bound;
  }
}

std::int64_t SplitMix64::between(std::int64_t lo, std::int64_t hi) noexcept {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double SplitMix64::unit() noexcept {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

Scalar SplitMix64::positive_rational(std::uint64_t max_num, std::uint64_t max_den) noexcept {
  const unsigned long p = 1 + below(max_num);
  const unsigned long q = 1 + below(max_den);
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) noexcept {
  SplitMix64 g(seed ^ (tag * 0xD1B54A32D192ED03ULL));
  return g.next();
}

}  // namespace vlat
