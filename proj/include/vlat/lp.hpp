#pragma once

// Exact rational linear programming: dense two-phase tableau simplex with
// Bland's pivoting rule.

#include <optional>
#include <string_view>
#include <vector>

#include "vlat/matrix.hpp"

namespace vlat {

enum class RowSense { Leq, Eq, Geq };
enum class Direction { Minimize, Maximize };

struct LinearProgram {
  Direction direction = Direction::Minimize;
  Vector objective;
  Scalar objective_offset = 0;
  Matrix constraints;  // rows x variables
  Vector rhs;
  std::vector<RowSense> senses;
  // Absent bound = unbounded on that side. make_lp defaults to x >= 0.
  std::vector<std::optional<Scalar>> lower;
  std::vector<std::optional<Scalar>> upper;

  std::size_t num_vars() const noexcept { return objective.size(); }
  std::size_t num_rows() const noexcept { return rhs.size(); }

  void add_row(const Vector& coeffs, RowSense sense, const Scalar& bound);
};

/// Program with `num_vars` variables, nonnegative by default, no rows.
LinearProgram make_lp(std::size_t num_vars, Direction direction = Direction::Minimize);

/// Same, but every variable is free.
LinearProgram make_free_lp(std::size_t num_vars, Direction direction = Direction::Minimize);

enum class LpStatus { Optimal, Infeasible, Unbounded };

std::string_view to_string(LpStatus status) noexcept;

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Scalar value;       // meaningful iff Optimal
  Vector solution;    // a vertex (in original variables) iff Optimal
  std::size_t pivots = 0;
};

/// Throws MalformedProgram when dimensions are inconsistent.
LpResult lp_optimize(const LinearProgram& lp);

/// True iff `x` satisfies every row and bound of `lp` exactly.
bool is_feasible_point(const LinearProgram& lp, const Vector& x);

}  // namespace vlat
