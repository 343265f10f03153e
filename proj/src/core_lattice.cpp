#include "vlat/core_lattice.hpp"

#include <utility>

#include "vlat/error.hpp"

namespace vlat {

SimplicialCone::SimplicialCone(Matrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square() || basis_.rows() == 0)
    throw Error(ErrorCode::DimensionMismatch, "basis must be a non-empty square matrix");
  auto inv = inverse(basis_);
  if (!inv) throw Error(ErrorCode::SingularBasis);
  basis_inverse_ = std::move(*inv);
  standard_ = basis_ == Matrix::identity(basis_.rows());
}

SimplicialCone SimplicialCone::standard(std::size_t dim) {
  return SimplicialCone(Matrix::identity(dim));
}

LatticeSpace::LatticeSpace(SimplicialCone cone, std::string label)
    : cone_(std::move(cone)), label_(std::move(label)) {}

LatticeSpace LatticeSpace::standard(std::size_t dim) {
  return LatticeSpace(SimplicialCone::standard(dim), "standard");
}

LatticeSpace make_space(const Matrix& basis, std::string label) {
  return LatticeSpace(SimplicialCone(basis), std::move(label));
}

namespace {

void require_dim(const LatticeSpace& space, const Vector& v) {
  if (v.size() != space.dim())
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " in space of dimension " +
                    std::to_string(space.dim()));
}

}  // namespace

Vector to_coords(const LatticeSpace& space, const Vector& v) {
  require_dim(space, v);
  if (space.is_standard()) return v;
  return space.cone().basis_inverse() * v;
}

Vector from_coords(const LatticeSpace& space, const Vector& c) {
  require_dim(space, c);
  if (space.is_standard()) return c;
  return space.cone().basis() * c;
}

Vector vec_sup(const LatticeSpace& space, const Vector& x, const Vector& y) {
  Vector cx = to_coords(space, x);
  const Vector cy = to_coords(space, y);
  for (std::size_t i = 0; i < cx.size(); ++i)
    if (cy[i] > cx[i]) cx[i] = cy[i];
  return from_coords(space, cx);
}

Vector vec_inf(const LatticeSpace& space, const Vector& x, const Vector& y) {
  // x ^ y = -((-x) v (-y))
  return -vec_sup(space, -x, -y);
}

Vector positive_part(const LatticeSpace& space, const Vector& x) {
  return vec_sup(space, x, zeros(x.size()));
}

Vector negative_part(const LatticeSpace& space, const Vector& x) {
  return vec_sup(space, -x, zeros(x.size()));
}

Vector abs(const LatticeSpace& space, const Vector& x) { return vec_sup(space, x, -x); }

bool vec_leq(const LatticeSpace& space, const Vector& x, const Vector& y) {
  require_dim(space, x);
  return is_nonnegative(to_coords(space, y - x));
}

bool is_positive(const LatticeSpace& space, const Vector& x) {
  return is_nonnegative(to_coords(space, x));
}

bool are_disjoint(const LatticeSpace& space, const Vector& x, const Vector& y) {
  return is_zero(vec_inf(space, abs(space, x), abs(space, y)));
}

Vector band_project(const LatticeSpace& space, const Vector& e, const Vector& x) {
  const Vector ce = to_coords(space, e);
  if (!is_nonnegative(ce)) throw Error(ErrorCode::NotPositive, "band generator");
  Vector cx = to_coords(space, x);
  for (std::size_t i = 0; i < cx.size(); ++i)
    if (sgn(ce[i]) == 0) cx[i] = 0;
  return from_coords(space, cx);
}

}  // namespace vlat
