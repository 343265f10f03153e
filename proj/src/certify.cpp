#include "vlat/certify.hpp"

#include <utility>

#include "vlat/error.hpp"

namespace vlat {

bool Certificate::recheck() const {
  if (!failures.empty()) return false;
  for (const auto& w : witnesses)
    if (!w.satisfied()) return false;
  return true;
}

void finalize(Certificate& cert) { cert.holds = cert.recheck(); }

namespace {

// Dual-cone generator functionals: the rows of B^{-1}.
Vector functional(const LatticeSpace& space, std::size_t i) {
  return space.cone().basis_inverse().row(i);
}

// Row vector phi * M.
Vector row_times(const Vector& phi, const Matrix& m) {
  Vector r(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (sgn(phi[k]) != 0) r[j] += phi[k] * m(k, j);
  return r;
}

// Rows (I - E) z = 0 pin z to the range of E.
void add_range_rows(LinearProgram& lp, const RegularOperator& e) {
  const Matrix complement = Matrix::identity(e.dim()) - e.matrix();
  for (std::size_t r = 0; r < e.dim(); ++r) lp.add_row(complement.row(r), RowSense::Eq, 0);
}

bool positively_parallel(const Vector& u, const Vector& v) {
  std::size_t k = 0;
  while (k < u.size() && sgn(u[k]) == 0) ++k;
  if (k == u.size() || sgn(v[k]) == 0) return false;
  const Scalar ratio = v[k] / u[k];
  if (sgn(ratio) <= 0) return false;
  return ratio * u == v;
}

std::string status_failure(const std::string& test, std::size_t i, LpStatus status) {
  return test + " functional " + std::to_string(i) + ": " + std::string(to_string(status));
}

}  // namespace

CertifiedVector certify_meet(const RegularOperator& s, const RegularOperator& t, const Vector& x) {
  if (!(s.space() == t.space())) throw Error(ErrorCode::SpaceMismatch);
  if (!is_positive(s)) throw Error(ErrorCode::NotPositive, "lhs");
  if (!is_positive(t)) throw Error(ErrorCode::NotPositive, "rhs");
  const LatticeSpace& space = s.space();
  const Vector xc = to_coords(space, x);
  if (!is_nonnegative(xc)) throw Error(ErrorCode::NotPositive, "x");

  const std::size_t n = space.dim();
  const Matrix& sc = s.cone_form();
  const Matrix& tc = t.cone_form();
  const Vector txc = tc * xc;

  CertifiedVector out;
  out.certificate.claim = "riesz-kantorovich-infimum";
  Vector minima(n);
  for (std::size_t i = 0; i < n; ++i) {
    // Variables: cone coordinates of y, boxed by 0 <= y <= x.
    LinearProgram lp = make_lp(n, Direction::Minimize);
    for (std::size_t j = 0; j < n; ++j) {
      lp.objective[j] = sc(i, j) - tc(i, j);
      lp.upper[j] = xc[j];
    }
    lp.objective_offset = txc[i];
    const LpResult res = lp_optimize(lp);
    if (res.status != LpStatus::Optimal || !is_feasible_point(lp, res.solution)) {
      out.certificate.failures.push_back(status_failure("infimum", i, res.status));
      continue;
    }
    minima[i] = res.value;
    out.certificate.witnesses.push_back({"infimum", i, res.value, WitnessBound::AtLeastZero});
  }
  out.value = from_coords(space, minima);
  finalize(out.certificate);
  return out;
}

std::vector<Vector> positive_spanning_set(const RegularOperator& e) {
  std::vector<Vector> out;
  const auto& cone = e.space().cone();
  for (std::size_t j = 0; j < e.dim(); ++j) {
    Vector v = e.apply(cone.generator(j));
    if (is_zero(v)) continue;
    bool seen = false;
    for (const auto& u : out) {
      if (positively_parallel(u, v)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(v));
  }
  return out;
}

CertifiedSublattice::CertifiedSublattice(RegularOperator projector)
    : projector_(std::move(projector)) {
  if (!is_positive(projector_)) throw Error(ErrorCode::NotPositive, "projector");
  if (!is_idempotent(projector_)) throw Error(ErrorCode::NotIdempotent, "projector");
  range_basis_ = positive_spanning_set(projector_);
}

std::vector<Vector> range_lattice_basis(const RegularOperator& e) {
  std::vector<Vector> pool = positive_spanning_set(e);
  const std::size_t n = e.dim();
  for (std::size_t c = 0; c < pool.size();) {
    // Is pool[c] a nonnegative combination of the others?
    std::vector<Vector> others;
    for (std::size_t j = 0; j < pool.size(); ++j)
      if (j != c) others.push_back(pool[j]);
    LinearProgram lp = make_lp(others.size());
    for (std::size_t r = 0; r < n; ++r) {
      Vector row(others.size());
      for (std::size_t j = 0; j < others.size(); ++j) row[j] = others[j][r];
      lp.add_row(row, RowSense::Eq, pool[c][r]);
    }
    if (!others.empty() && lp_optimize(lp).status == LpStatus::Optimal) {
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(c));
    } else {
      ++c;
    }
  }
  if (pool.size() != rank(e.matrix()))
    throw Error(ErrorCode::PreconditionFailed, "range cone is not simplicial");
  return pool;
}

RegularOperator restrict_to_range(const RegularOperator& e, const RegularOperator& t) {
  if (!(e.space() == t.space())) throw Error(ErrorCode::SpaceMismatch);
  const std::vector<Vector> basis = range_lattice_basis(e);
  std::vector<Vector> columns;
  for (const auto& v : basis) {
    auto coeffs = solve_combination(basis, t.apply(v));
    if (!coeffs) throw Error(ErrorCode::NotInRange, "operator does not leave the range invariant");
    columns.push_back(std::move(*coeffs));
  }
  return RegularOperator::standard(Matrix::from_columns(columns));
}

CertifiedVector range_sup(const CertifiedSublattice& sub, const Vector& y1, const Vector& y2) {
  const LatticeSpace& space = sub.parent();
  if (y1.size() != space.dim() || y2.size() != space.dim()) throw Error(ErrorCode::DimensionMismatch);
  if (!sub.contains(y1)) throw Error(ErrorCode::NotInRange, "y1");
  if (!sub.contains(y2)) throw Error(ErrorCode::NotInRange, "y2");
  const RegularOperator& e = sub.projector();
  const std::size_t n = space.dim();

  CertifiedVector out;
  out.value = e.apply(vec_sup(space, y1, y2));
  out.certificate.claim = "range-least-upper-bound";

  for (std::size_t i = 0; i < n; ++i) {
    const Vector phi = functional(space, i);
    out.certificate.witnesses.push_back(
        {"upper-bound y1", i, dot(phi, out.value - y1), WitnessBound::AtLeastZero});
    out.certificate.witnesses.push_back(
        {"upper-bound y2", i, dot(phi, out.value - y2), WitnessBound::AtLeastZero});
  }

  // Minimality: min phi_i(z - s) over upper bounds z in Y must be >= 0.
  for (std::size_t i = 0; i < n; ++i) {
    const Vector phi = functional(space, i);
    LinearProgram lp = make_free_lp(n, Direction::Minimize);
    lp.objective = phi;
    lp.objective_offset = -dot(phi, out.value);
    add_range_rows(lp, e);
    for (std::size_t l = 0; l < n; ++l) {
      const Vector psi = functional(space, l);
      lp.add_row(psi, RowSense::Geq, dot(psi, y1));
      lp.add_row(psi, RowSense::Geq, dot(psi, y2));
    }
    const LpResult res = lp_optimize(lp);
    if (res.status != LpStatus::Optimal) {
      out.certificate.failures.push_back(status_failure("minimality", i, res.status));
      continue;
    }
    out.certificate.witnesses.push_back({"minimality", i, res.value, WitnessBound::AtLeastZero});
  }
  finalize(out.certificate);
  return out;
}

Certificate transfer_check(const RegularOperator& e, const RegularOperator& t) {
  if (!(e.space() == t.space())) throw Error(ErrorCode::SpaceMismatch);
  if (!is_positive(e) || !is_positive(t)) throw Error(ErrorCode::HypothesisViolated, "positive");
  if (!is_idempotent(e)) throw Error(ErrorCode::HypothesisViolated, "idempotent");
  if (!(e.matrix() * t.matrix() == t.matrix())) throw Error(ErrorCode::HypothesisViolated, "ET=T");
  if (!(t.matrix() * e.matrix() == t.matrix())) throw Error(ErrorCode::HypothesisViolated, "TE=T");
  if (!op_meet(e, t).matrix().is_zero()) throw Error(ErrorCode::HypothesisViolated, "meet");

  const LatticeSpace& space = e.space();
  const std::size_t n = space.dim();
  const Matrix id_minus_t = Matrix::identity(n) - t.matrix();

  Certificate cert;
  cert.claim = "disjointness-transfer";
  const std::vector<Vector> spanning = positive_spanning_set(e);
  for (std::size_t idx = 0; idx < spanning.size(); ++idx) {
    const Vector& y = spanning[idx];
    const Vector ty = t.apply(y);
    const std::string tag = " y#" + std::to_string(idx);

    // (a) c_i = inf over Q of phi_i, Q = {(I - T) w + T y : w in Y, 0 <= w <= y}.
    Vector c(n);
    bool complete = true;
    for (std::size_t i = 0; i < n; ++i) {
      const Vector phi = functional(space, i);
      LinearProgram lp = make_free_lp(n, Direction::Minimize);
      lp.objective = row_times(phi, id_minus_t);
      lp.objective_offset = dot(phi, ty);
      add_range_rows(lp, e);
      for (std::size_t l = 0; l < n; ++l) {
        const Vector psi = functional(space, l);
        lp.add_row(psi, RowSense::Geq, 0);
        lp.add_row(psi, RowSense::Leq, dot(psi, y));
      }
      const LpResult res = lp_optimize(lp);
      if (res.status != LpStatus::Optimal) {
        cert.failures.push_back(status_failure("lower-bound" + tag, i, res.status));
        complete = false;
        continue;
      }
      c[i] = res.value;
      cert.witnesses.push_back({"lower-bound" + tag, i, res.value, WitnessBound::AtLeastZero});
    }
    if (!complete) continue;

    // (b) every lower bound l in Y of Q (equivalently l in Y, l <= c) has l <= 0.
    for (std::size_t k = 0; k < n; ++k) {
      LinearProgram lp = make_free_lp(n, Direction::Maximize);
      lp.objective = functional(space, k);
      add_range_rows(lp, e);
      for (std::size_t l = 0; l < n; ++l) lp.add_row(functional(space, l), RowSense::Leq, c[l]);
      const LpResult res = lp_optimize(lp);
      if (res.status != LpStatus::Optimal) {
        cert.failures.push_back(status_failure("greatest-lower-bound" + tag, k, res.status));
        continue;
      }
      cert.witnesses.push_back(
          {"greatest-lower-bound" + tag, k, res.value, WitnessBound::AtMostZero});
    }
  }
  finalize(cert);
  return cert;
}

}  // namespace vlat
