#pragma once

// Random generators for property tests. Every generator is a pure function
// of the SplitMix64 stream it is handed.

#include <numeric>

#include "vlat/core_lattice.hpp"
#include "vlat/matrix.hpp"
#include "vlat/operator_lattice.hpp"
#include "vlat/projection_lab.hpp"
#include "vlat/rng.hpp"

namespace vlat::testing {

inline Scalar frac(long num, long den) {
  Scalar q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

inline Scalar small_rational(SplitMix64& rng, std::int64_t lo = -5, std::int64_t hi = 5) {
  return frac(static_cast<long>(rng.between(lo, hi)), static_cast<long>(rng.between(1, 4)));
}

inline Scalar nonnegative_rational(SplitMix64& rng) {
  if (rng.below(3) == 0) return Scalar(0);
  return rng.positive_rational(6, 6);
}

inline Matrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(rng);
  return m;
}

inline Matrix random_nonnegative_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = nonnegative_rational(rng);
  return m;
}

/// Invertible integer basis, retried until nonsingular.
inline Matrix random_basis(SplitMix64& rng, std::size_t n) {
  for (;;) {
    Matrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) = Scalar(rng.between(-3, 3));
    if (rank(b) == n) return b;
  }
}

inline LatticeSpace random_space(SplitMix64& rng, std::size_t n) {
  if (rng.below(2) == 0) return LatticeSpace::standard(n);
  return make_space(random_basis(rng, n), "random");
}

/// Positive operator: a nonnegative cone form carried back to ambient coordinates.
inline RegularOperator random_positive_operator(SplitMix64& rng, const LatticeSpace& space) {
  return RegularOperator::from_cone_form(space, random_nonnegative_matrix(rng, space.dim(), space.dim()));
}

inline RegularOperator random_regular_operator(SplitMix64& rng, const LatticeSpace& space) {
  return RegularOperator::from_cone_form(space, random_matrix(rng, space.dim(), space.dim()));
}

inline Vector random_coords(SplitMix64& rng, std::size_t n) {
  Vector c(n);
  for (auto& x : c) x = small_rational(rng);
  return c;
}

inline Vector random_positive_vector(SplitMix64& rng, const LatticeSpace& space) {
  Vector c(space.dim());
  for (auto& x : c) x = nonnegative_rational(rng);
  return from_coords(space, c);
}

/// Equal-size blocks of a shuffled {0..n-1}; block size drawn among divisors.
inline Partition random_equal_partition(SplitMix64& rng, std::size_t n) {
  std::vector<std::size_t> divisors;
  for (std::size_t k = 1; k <= n; ++k)
    if (n % k == 0) divisors.push_back(k);
  const std::size_t k = divisors[rng.below(divisors.size())];
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  rng.shuffle(idx);
  Partition p;
  for (std::size_t b = 0; b < n / k; ++b)
    p.blocks.emplace_back(idx.begin() + static_cast<std::ptrdiff_t>(b * k),
                          idx.begin() + static_cast<std::ptrdiff_t>((b + 1) * k));
  return p;
}

}  // namespace vlat::testing
