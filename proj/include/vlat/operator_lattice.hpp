#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "vlat/core_lattice.hpp"

namespace vlat {

/// Linear operator on a LatticeSpace, stored in ambient coordinates. In
/// finite dimension every operator is regular.
class RegularOperator {
 public:
  RegularOperator(LatticeSpace space, Matrix matrix);

  /// Operator on the standard lattice of matching dimension.
  static RegularOperator standard(Matrix matrix);

  const LatticeSpace& space() const noexcept { return space_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return space_.dim(); }

  /// B^{-1} A B; positivity, meets and the diagonal live here.
  const Matrix& cone_form() const noexcept { return cone_form_; }

  /// Same operator re-expressed on the standard lattice via its cone form.
  RegularOperator in_cone_coordinates() const;

  static RegularOperator from_cone_form(LatticeSpace space, const Matrix& cone_form);

  Vector apply(const Vector& v) const { return matrix_ * v; }

 private:
  LatticeSpace space_;
  Matrix matrix_;
  Matrix cone_form_;
};

RegularOperator compose(const RegularOperator& a, const RegularOperator& b);
RegularOperator operator+(const RegularOperator& a, const RegularOperator& b);
RegularOperator operator-(const RegularOperator& a, const RegularOperator& b);
RegularOperator operator*(const Scalar& s, const RegularOperator& a);
bool operator==(const RegularOperator& a, const RegularOperator& b);

RegularOperator identity_operator(const LatticeSpace& space);
RegularOperator zero_operator(const LatticeSpace& space);

bool is_positive(const RegularOperator& t);
bool is_idempotent(const RegularOperator& t);

/// Entrywise order in cone coordinates (S <= T in L^r(X)).
bool op_leq(const RegularOperator& s, const RegularOperator& t);

/// Lattice meet in L^r(X): entrywise minimum of cone forms. Throws
/// NotPositive / SpaceMismatch.
RegularOperator op_meet(const RegularOperator& s, const RegularOperator& t);

/// Diagonal part of the cone form: the image of T under the band projection
/// onto the center.
struct DiagonalPart {
  Vector alpha_vector;
  bool is_scalar = false;
  std::optional<Scalar> alpha;
};

DiagonalPart diagonal_part(const RegularOperator& t);

/// The central operator diag(alpha_vector) as an operator on T's space.
RegularOperator central_operator(const LatticeSpace& space, const Vector& multipliers);

/// alpha when D(P) = alpha * id, otherwise nullopt. Throws NotPositive.
std::optional<Scalar> constant_diagonal_alpha(const RegularOperator& p);

/// The two-condition form: alpha*id <= P and every positive central M <= P
/// satisfies M <= alpha*id. Decided by checking that (P - alpha*id) ^ id = 0,
/// which is the characterization through the diagonal band.
bool satisfies_two_condition_definition(const RegularOperator& p, const Scalar& alpha);

/// Exponent p in [1, infinity].
struct Exponent {
  bool infinite = false;
  Scalar value = 1;

  static Exponent inf() { return Exponent{true, 0}; }
  static Exponent of(Scalar p) { return Exponent{false, std::move(p)}; }
};

Exponent parse_exponent(std::string_view text);
std::string format_exponent(const Exponent& p);

struct OperatorNorm {
  double value = 0.0;
  std::optional<Scalar> exact;  // set for p in {1, infinity}
  std::size_t iterations = 0;   // power iteration only
  double tolerance = 0.0;       // 0 when exact
  std::string method;           // "column-sum", "row-sum", "svd", "power-iteration"
};

inline constexpr double kPowerIterationTolerance = 1e-10;
inline constexpr std::size_t kPowerIterationCap = 100000;
inline constexpr double kSvdTolerance = 1e-12;

/// Induced l_p operator norm on the standard lattice. Throws UnsupportedCone
/// for non-standard cones and BadExponent for p < 1.
OperatorNorm operator_pnorm(const RegularOperator& t, const Exponent& p);

}  // namespace vlat
