#include "vlat/lp.hpp"

#include <string>
#include <utility>

#include "vlat/error.hpp"

namespace vlat {

void LinearProgram::add_row(const Vector& coeffs, RowSense sense, const Scalar& bound) {
  if (coeffs.size() != num_vars()) throw Error(ErrorCode::MalformedProgram, "row length");
  Matrix grown(constraints.rows() + 1, num_vars());
  for (std::size_t i = 0; i < constraints.rows(); ++i)
    for (std::size_t j = 0; j < num_vars(); ++j) grown(i, j) = constraints(i, j);
  for (std::size_t j = 0; j < num_vars(); ++j) grown(constraints.rows(), j) = coeffs[j];
  constraints = std::move(grown);
  rhs.push_back(bound);
  senses.push_back(sense);
}

LinearProgram make_lp(std::size_t num_vars, Direction direction) {
  LinearProgram lp;
  lp.direction = direction;
  lp.objective = zeros(num_vars);
  lp.constraints = Matrix(0, num_vars);
  lp.lower.assign(num_vars, Scalar(0));
  lp.upper.assign(num_vars, std::nullopt);
  return lp;
}

LinearProgram make_free_lp(std::size_t num_vars, Direction direction) {
  LinearProgram lp = make_lp(num_vars, direction);
  lp.lower.assign(num_vars, std::nullopt);
  return lp;
}

std::string_view to_string(LpStatus status) noexcept {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.num_rows();
  if (lp.constraints.rows() != m || (m > 0 && lp.constraints.cols() != n) ||
      lp.senses.size() != m || lp.lower.size() != n || lp.upper.size() != n) {
    throw Error(ErrorCode::MalformedProgram, "inconsistent dimensions");
  }
}

// A structural column of the standard-form program, x_orig[var] += sign * x_std[col].
struct ColumnMap {
  std::size_t var;
  int sign;
};

// Standard form: minimize c.x s.t. A x = b, x >= 0, b >= 0, built from the
// user program by shifting/splitting variables and adding slack columns.
class Tableau {
 public:
  Tableau(std::vector<Vector> rows, Vector rhs, std::vector<std::size_t> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  // Runs simplex on `cost` (length = #columns) restricted to columns < allowed.
  // Returns false on unboundedness.
  bool optimize(const Vector& cost, std::size_t allowed, std::size_t& pivots) {
    const std::size_t ncols = cost.size();
    reduced_ = cost;
    objective_ = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < ncols; ++j) reduced_[j] -= cb * rows_[r][j];
      objective_ += cb * rhs_[r];
    }
    for (;;) {
      // Bland: lowest-index column with negative reduced cost enters.
      std::size_t entering = ncols;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(reduced_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == ncols) return true;

      // Minimum ratio; ties go to the lowest basic variable index.
      std::size_t leaving = rows_.size();
      Scalar best_ratio;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (sgn(rows_[r][entering]) <= 0) continue;
        Scalar ratio = rhs_[r] / rows_[r][entering];
        if (leaving == rows_.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == rows_.size()) return false;
      pivot(leaving, entering);
      ++pivots;
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Scalar inv = 1 / rows_[r][c];
    for (auto& x : rows_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i == r || sgn(rows_[i][c]) == 0) continue;
      const Scalar f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (sgn(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (!reduced_.empty() && sgn(reduced_[c]) != 0) {
      const Scalar f = reduced_[c];
      for (std::size_t j = 0; j < reduced_.size(); ++j)
        if (sgn(rows_[r][j]) != 0) reduced_[j] -= f * rows_[r][j];
      objective_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  // After phase one: pivot artificial columns (index >= first_artificial) out
  // of the basis, dropping rows that turn out to be redundant.
  void expel_artificials(std::size_t first_artificial, std::size_t& pivots) {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < first_artificial) {
        ++r;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (sgn(rows_[r][j]) != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        continue;
      }
      pivot(r, col);
      ++pivots;
      ++r;
    }
  }

  Vector primal(std::size_t ncols) const {
    Vector x(ncols);
    for (std::size_t r = 0; r < rows_.size(); ++r) x[basis_[r]] = rhs_[r];
    return x;
  }

  const Scalar& objective() const noexcept { return objective_; }

 private:
  std::vector<Vector> rows_;
  Vector rhs_;
  std::vector<std::size_t> basis_;
  Vector reduced_;
  Scalar objective_;
};

}  // namespace

LpResult lp_optimize(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.num_vars();
  LpResult result;

  // Variable substitution x = offset + sum(sign * x_std).
  Vector offset(n);
  std::vector<ColumnMap> structural;
  struct ExtraRow {
    std::size_t col;
    Scalar bound;
  };
  std::vector<ExtraRow> upper_rows;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& lo = lp.lower[j];
    const auto& hi = lp.upper[j];
    if (lo && hi && *hi < *lo) return result;  // empty box
    if (lo) {
      offset[j] = *lo;
      structural.push_back({j, +1});
      if (hi) upper_rows.push_back({structural.size() - 1, *hi - *lo});
    } else if (hi) {
      offset[j] = *hi;
      structural.push_back({j, -1});
    } else {
      structural.push_back({j, +1});
      structural.push_back({j, -1});
    }
  }
  const std::size_t nstruct = structural.size();

  // Rows in structural columns, with senses; rhs shifted by offsets.
  struct Row {
    Vector coeffs;
    RowSense sense;
    Scalar bound;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    Row row{Vector(nstruct), lp.senses[i], lp.rhs[i]};
    for (std::size_t k = 0; k < nstruct; ++k) {
      const auto& cm = structural[k];
      row.coeffs[k] = cm.sign * lp.constraints(i, cm.var);
    }
    for (std::size_t j = 0; j < n; ++j) row.bound -= lp.constraints(i, j) * offset[j];
    rows.push_back(std::move(row));
  }
  for (const auto& ur : upper_rows) {
    Row row{Vector(nstruct), RowSense::Leq, ur.bound};
    row.coeffs[ur.col] = 1;
    rows.push_back(std::move(row));
  }
  for (auto& row : rows) {
    if (sgn(row.bound) < 0) {
      row.coeffs = -row.coeffs;
      row.bound = -row.bound;
      if (row.sense == RowSense::Leq)
        row.sense = RowSense::Geq;
      else if (row.sense == RowSense::Geq)
        row.sense = RowSense::Leq;
    }
  }

  // Column layout: [structural | slack/surplus | artificial].
  const std::size_t m = rows.size();
  std::size_t nslack = 0;
  std::size_t nart = 0;
  for (const auto& row : rows) {
    if (row.sense != RowSense::Eq) ++nslack;
    if (row.sense != RowSense::Leq) ++nart;
  }
  const std::size_t first_art = nstruct + nslack;
  const std::size_t ncols = first_art + nart;
  std::vector<Vector> tab(m, Vector(ncols));
  Vector rhs(m);
  std::vector<std::size_t> basis(m);
  std::size_t next_slack = nstruct;
  std::size_t next_art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < nstruct; ++k) tab[i][k] = rows[i].coeffs[k];
    rhs[i] = rows[i].bound;
    switch (rows[i].sense) {
      case RowSense::Leq:
        tab[i][next_slack] = 1;
        basis[i] = next_slack++;
        break;
      case RowSense::Geq:
        tab[i][next_slack++] = -1;
        tab[i][next_art] = 1;
        basis[i] = next_art++;
        break;
      case RowSense::Eq:
        tab[i][next_art] = 1;
        basis[i] = next_art++;
        break;
    }
  }

  Tableau tableau(std::move(tab), std::move(rhs), std::move(basis));

  if (nart > 0) {
    Vector phase1(ncols);
    for (std::size_t j = first_art; j < ncols; ++j) phase1[j] = 1;
    tableau.optimize(phase1, ncols, result.pivots);
    if (sgn(tableau.objective()) != 0) {
      result.status = LpStatus::Infeasible;
      return result;
    }
    tableau.expel_artificials(first_art, result.pivots);
  }

  const Scalar sense_sign = lp.direction == Direction::Minimize ? 1 : -1;
  Vector cost(ncols);
  for (std::size_t k = 0; k < nstruct; ++k)
    cost[k] = sense_sign * structural[k].sign * lp.objective[structural[k].var];
  if (!tableau.optimize(cost, first_art, result.pivots)) {
    result.status = LpStatus::Unbounded;
    return result;
  }

  const Vector xstd = tableau.primal(ncols);
  result.solution = offset;
  for (std::size_t k = 0; k < nstruct; ++k)
    result.solution[structural[k].var] += structural[k].sign * xstd[k];
  result.value = dot(lp.objective, result.solution) + lp.objective_offset;
  result.status = LpStatus::Optimal;
  return result;
}

bool is_feasible_point(const LinearProgram& lp, const Vector& x) {
  validate(lp);
  if (x.size() != lp.num_vars()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (lp.lower[j] && x[j] < *lp.lower[j]) return false;
    if (lp.upper[j] && x[j] > *lp.upper[j]) return false;
  }
  for (std::size_t i = 0; i < lp.num_rows(); ++i) {
    const Scalar lhs = dot(lp.constraints.row(i), x);
    switch (lp.senses[i]) {
      case RowSense::Leq:
        if (lhs > lp.rhs[i]) return false;
        break;
      case RowSense::Geq:
        if (lhs < lp.rhs[i]) return false;
        break;
      case RowSense::Eq:
        if (lhs != lp.rhs[i]) return false;
        break;
    }
  }
  return true;
}

}  // namespace vlat
