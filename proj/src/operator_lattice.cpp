#include "vlat/operator_lattice.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <utility>

#include "vlat/error.hpp"

namespace vlat {

namespace {

Matrix conjugate_into_cone(const LatticeSpace& space, const Matrix& m) {
  if (space.is_standard()) return m;
  return space.cone().basis_inverse() * m * space.cone().basis();
}

Matrix conjugate_out_of_cone(const LatticeSpace& space, const Matrix& c) {
  if (space.is_standard()) return c;
  return space.cone().basis() * c * space.cone().basis_inverse();
}

void require_same_space(const RegularOperator& a, const RegularOperator& b) {
  if (!(a.space() == b.space())) throw Error(ErrorCode::SpaceMismatch);
}

}  // namespace

RegularOperator::RegularOperator(LatticeSpace space, Matrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  if (matrix_.rows() != space_.dim() || matrix_.cols() != space_.dim())
    throw Error(ErrorCode::DimensionMismatch, "operator matrix does not match space dimension");
  cone_form_ = conjugate_into_cone(space_, matrix_);
}

RegularOperator RegularOperator::standard(Matrix matrix) {
  const std::size_t n = matrix.rows();
  return RegularOperator(LatticeSpace::standard(n), std::move(matrix));
}

RegularOperator RegularOperator::in_cone_coordinates() const {
  return RegularOperator(LatticeSpace::standard(dim()), cone_form_);
}

RegularOperator RegularOperator::from_cone_form(LatticeSpace space, const Matrix& cone_form) {
  Matrix ambient = conjugate_out_of_cone(space, cone_form);
  return RegularOperator(std::move(space), std::move(ambient));
}

RegularOperator compose(const RegularOperator& a, const RegularOperator& b) {
  require_same_space(a, b);
  return RegularOperator(a.space(), a.matrix() * b.matrix());
}

RegularOperator operator+(const RegularOperator& a, const RegularOperator& b) {
  require_same_space(a, b);
  return RegularOperator(a.space(), a.matrix() + b.matrix());
}

RegularOperator operator-(const RegularOperator& a, const RegularOperator& b) {
  require_same_space(a, b);
  return RegularOperator(a.space(), a.matrix() - b.matrix());
}

RegularOperator operator*(const Scalar& s, const RegularOperator& a) {
  return RegularOperator(a.space(), s * a.matrix());
}

bool operator==(const RegularOperator& a, const RegularOperator& b) {
  return a.space() == b.space() && a.matrix() == b.matrix();
}

RegularOperator identity_operator(const LatticeSpace& space) {
  return RegularOperator(space, Matrix::identity(space.dim()));
}

RegularOperator zero_operator(const LatticeSpace& space) {
  return RegularOperator(space, Matrix(space.dim(), space.dim()));
}

bool is_positive(const RegularOperator& t) { return t.cone_form().is_nonnegative(); }

bool is_idempotent(const RegularOperator& t) {
  return t.matrix() * t.matrix() == t.matrix();
}

bool op_leq(const RegularOperator& s, const RegularOperator& t) {
  require_same_space(s, t);
  return (t.cone_form() - s.cone_form()).is_nonnegative();
}

RegularOperator op_meet(const RegularOperator& s, const RegularOperator& t) {
  require_same_space(s, t);
  if (!is_positive(s)) throw Error(ErrorCode::NotPositive, "lhs");
  if (!is_positive(t)) throw Error(ErrorCode::NotPositive, "rhs");
  const Matrix& a = s.cone_form();
  const Matrix& b = t.cone_form();
  Matrix m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j) < b(i, j) ? a(i, j) : b(i, j);
  return RegularOperator::from_cone_form(s.space(), m);
}

DiagonalPart diagonal_part(const RegularOperator& t) {
  DiagonalPart d;
  d.alpha_vector = t.cone_form().diagonal();
  d.is_scalar = true;
  for (const auto& a : d.alpha_vector) {
    if (a != d.alpha_vector.front()) {
      d.is_scalar = false;
      break;
    }
  }
  if (d.is_scalar && !d.alpha_vector.empty()) d.alpha = d.alpha_vector.front();
  return d;
}

RegularOperator central_operator(const LatticeSpace& space, const Vector& multipliers) {
  if (multipliers.size() != space.dim()) throw Error(ErrorCode::DimensionMismatch);
  return RegularOperator::from_cone_form(space, Matrix::diagonal(multipliers));
}

std::optional<Scalar> constant_diagonal_alpha(const RegularOperator& p) {
  if (!is_positive(p)) throw Error(ErrorCode::NotPositive);
  return diagonal_part(p).alpha;
}

bool satisfies_two_condition_definition(const RegularOperator& p, const Scalar& alpha) {
  const RegularOperator scaled_id = alpha * identity_operator(p.space());
  if (!op_leq(scaled_id, p)) return false;
  const RegularOperator rest = p - scaled_id;
  return op_meet(rest, identity_operator(p.space())).matrix().is_zero();
}

Exponent parse_exponent(std::string_view text) {
  if (text == "inf" || text == "infinity" || text == "Inf") return Exponent::inf();
  return Exponent::of(parse_scalar(text));
}

std::string format_exponent(const Exponent& p) {
  return p.infinite ? std::string("inf") : format_scalar(p.value);
}

namespace {

Eigen::MatrixXd to_eigen(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j).get_d();
  return e;
}

double lp_norm(const Eigen::VectorXd& v, double p) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v(i)), p);
  return std::pow(s, 1.0 / p);
}

// Boyd's ascent for nonnegative matrices: x <- psi_q(A^T psi_p(A x)),
// normalized in l_p. ||A x||_p is nondecreasing along the iterates.
OperatorNorm power_iteration_norm(const Matrix& m, double p) {
  OperatorNorm out;
  out.method = "power-iteration";
  out.tolerance = kPowerIterationTolerance;
  const Eigen::MatrixXd a = to_eigen(m);
  const double q = p / (p - 1.0);
  Eigen::VectorXd x = Eigen::VectorXd::Ones(a.cols());
  x /= lp_norm(x, p);
  double estimate = lp_norm(a * x, p);
  if (estimate == 0.0) {
    out.value = 0.0;
    return out;
  }
  for (std::size_t it = 1; it <= kPowerIterationCap; ++it) {
    Eigen::VectorXd y = a * x;
    for (Eigen::Index i = 0; i < y.size(); ++i) y(i) = std::pow(y(i), p - 1.0);
    Eigen::VectorXd z = a.transpose() * y;
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = std::pow(z(i), q - 1.0);
    const double zn = lp_norm(z, p);
    if (zn == 0.0) break;
    x = z / zn;
    const double next = lp_norm(a * x, p);
    out.iterations = it;
    const bool converged = std::abs(next - estimate) <= kPowerIterationTolerance * next;
    estimate = std::max(estimate, next);
    if (converged) break;
  }
  out.value = estimate;
  return out;
}

}  // namespace

OperatorNorm operator_pnorm(const RegularOperator& t, const Exponent& p) {
  if (!t.space().is_standard()) throw Error(ErrorCode::UnsupportedCone);
  if (!p.infinite && p.value < 1) throw Error(ErrorCode::BadExponent, format_exponent(p));
  const Matrix& m = t.matrix();
  const std::size_t n = m.rows();
  OperatorNorm out;

  if (p.infinite || p.value == 1) {
    Scalar best = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Scalar sum = 0;
      for (std::size_t l = 0; l < n; ++l) sum += ::abs(p.infinite ? m(k, l) : m(l, k));
      if (sum > best) best = sum;
    }
    out.exact = best;
    out.value = best.get_d();
    out.method = p.infinite ? "row-sum" : "column-sum";
    return out;
  }

  if (p.value == 2) {
    const Eigen::JacobiSVD<Eigen::MatrixXd> svd(to_eigen(m));
    out.value = n == 0 ? 0.0 : svd.singularValues()(0);
    out.method = "svd";
    out.tolerance = kSvdTolerance;
    return out;
  }

  if (!is_positive(t)) throw Error(ErrorCode::NotPositive, "power iteration needs a positive operator");
  return power_iteration_norm(m, p.value.get_d());
}

}  // namespace vlat
