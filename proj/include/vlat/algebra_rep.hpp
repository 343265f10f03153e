#pragma once

// Finite-dimensional lattice-ordered algebras and the non-representability
// test driven by a pair of idempotents e, p with p = alpha*e + x, x ^ e = 0.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vlat/core_lattice.hpp"
#include "vlat/operator_lattice.hpp"

namespace vlat {

class LatticeAlgebra {
 public:
  /// structure[i][j] = coordinates (ambient) of b_i * b_j, where b_i is the
  /// i-th standard ambient basis vector. Throws DimensionMismatch,
  /// NotAssociative, or HypothesisViolated("unit") if the unit fails.
  LatticeAlgebra(LatticeSpace space, std::vector<std::vector<Vector>> structure,
                 std::optional<Vector> unit = std::nullopt);

  const LatticeSpace& space() const noexcept { return space_; }
  const std::vector<std::vector<Vector>>& structure() const noexcept { return structure_; }
  const std::optional<Vector>& unit() const noexcept { return unit_; }
  std::size_t dim() const noexcept { return space_.dim(); }

  Vector multiply(const Vector& x, const Vector& y) const;

 private:
  LatticeSpace space_;
  std::vector<std::vector<Vector>> structure_;
  std::optional<Vector> unit_;
};

/// Structure constants of the pointwise product on R^n.
std::vector<std::vector<Vector>> pointwise_structure(std::size_t n);

Vector multiply(const LatticeAlgebra& a, const Vector& x, const Vector& y);

/// Products of cone generators all positive (decides positivity of every
/// product of positive elements by bilinearity).
bool check_positive_multiplication(const LatticeAlgebra& a);

/// R^2 with cone generated by (1, beta), (1, 1), pointwise product and unit
/// (1, 1). Throws BetaOutOfRange unless -1 <= beta <= 0.
LatticeAlgebra wickstead_family(const Scalar& beta);

/// beta / (beta - 1). Throws BetaOutOfRange.
Scalar family_alpha(const Scalar& beta);

/// True iff beta = 0 or beta = -1/(n-1) for some n >= 2.
bool beta_is_permitted(const Scalar& beta);

enum class Classification { NonRepresentable, Inconclusive };
std::string_view to_string(Classification c) noexcept;

struct PoisonVerdict {
  Scalar alpha;
  Classification classification = Classification::Inconclusive;
  std::vector<std::pair<std::string, bool>> hypothesis_log;
  Vector band_part;      // alpha * e
  Vector disjoint_part;  // x = p - alpha * e
};

/// Throws Error{HypothesisViolated, which} when e or p is not positive and
/// nonzero ("positive"), not idempotent ("e^2=e", "p^2=p"), fails
/// ep = pe = p ("ep=p", "pe=p"), or p's band component along e is not a
/// scalar multiple of e ("scalar-multiple") or x ^ e != 0 ("disjoint").
PoisonVerdict poison_verdict(const LatticeAlgebra& a, const Vector& e, const Vector& p);

/// Diagonal of (alpha*E + T)|_Y in a lattice basis of Y = E(X).
DiagonalPart transported_diagonal(const RegularOperator& e, const RegularOperator& t,
                                  const Scalar& alpha);

}  // namespace vlat
