#pragma once

// LP-backed order-theoretic certificates.
//
// All order-interval polytopes are written in cone coordinates, so every
// program here is a box (or half-space family) intersected with a linear
// subspace. The closed-form lattice operations of core_lattice and
// operator_lattice are never consulted on the LP side.

#include <string>
#include <vector>

#include "vlat/lp.hpp"
#include "vlat/operator_lattice.hpp"

namespace vlat {

enum class WitnessBound { AtLeastZero, AtMostZero };

struct Witness {
  std::string test;        // which inequality family ("lower-bound", "minimality", ...)
  std::size_t functional;  // cone-coordinate functional index
  Scalar value;            // LP optimum (or exact evaluation)
  WitnessBound bound = WitnessBound::AtLeastZero;

  bool satisfied() const {
    return bound == WitnessBound::AtLeastZero ? sgn(value) >= 0 : sgn(value) <= 0;
  }
};

struct Certificate {
  std::string claim;
  bool holds = false;
  std::vector<Witness> witnesses;
  std::vector<std::string> failures;  // LP statuses that prevented a witness

  /// Recomputes holds from the witnesses alone.
  bool recheck() const;
};

/// Sets holds = every witness satisfied and no failures recorded.
void finalize(Certificate& cert);

struct CertifiedVector {
  Vector value;
  Certificate certificate;
};

/// Riesz-Kantorovich meet evaluated by LP: coordinate i of the result is
/// min over the order interval 0 <= y <= x of coordinate i of S y + T (x - y).
/// Throws NotPositive.
CertifiedVector certify_meet(const RegularOperator& s, const RegularOperator& t, const Vector& x);

/// Range Y = E(X) of a positive projection together with its positive
/// spanning family {E g_j} (deduplicated up to positive scaling).
class CertifiedSublattice {
 public:
  /// Throws NotPositive or NotIdempotent.
  explicit CertifiedSublattice(RegularOperator projector);

  const LatticeSpace& parent() const noexcept { return projector_.space(); }
  const RegularOperator& projector() const noexcept { return projector_; }
  const std::vector<Vector>& range_basis() const noexcept { return range_basis_; }
  bool contains(const Vector& v) const { return projector_.apply(v) == v; }

 private:
  RegularOperator projector_;
  std::vector<Vector> range_basis_;
};

/// Nonzero vectors E g_j over the cone generators g_j, with positive multiples
/// of earlier entries dropped.
std::vector<Vector> positive_spanning_set(const RegularOperator& e);

/// Extreme rays of Y_+ = E(X_+): a lattice basis of the range, in which the
/// inherited order is coordinatewise. Extremality is decided by LP.
std::vector<Vector> range_lattice_basis(const RegularOperator& e);

/// Matrix of T|_Y in the lattice basis of Y = E(X). Requires T(Y) in Y.
RegularOperator restrict_to_range(const RegularOperator& e, const RegularOperator& t);

/// Least upper bound of y1, y2 inside Y, computed as E(y1 v y2) and certified
/// by LP minimality. Throws NotInRange.
CertifiedVector range_sup(const CertifiedSublattice& sub, const Vector& y1, const Vector& y2);

/// Certifies id_Y ^ T|_Y = 0 in L^r(Y) on a positive spanning family of Y.
/// Hypotheses are checked first; a failure throws
/// Error{HypothesisViolated, "positive" | "idempotent" | "ET=T" | "TE=T" | "meet"}.
Certificate transfer_check(const RegularOperator& e, const RegularOperator& t);

}  // namespace vlat
