#pragma once

// Finite-dimensional vector lattices presented as simplicial cones.
//
// A space is fixed by an invertible basis whose columns generate the positive
// cone. Every lattice operation is the coordinatewise operation on cone
// coordinates c = B^{-1} v, mapped back through B.

#include <memory>
#include <string>

#include "vlat/matrix.hpp"

namespace vlat {

class SimplicialCone {
 public:
  /// Throws DimensionMismatch if basis is not square, SingularBasis if it is
  /// not invertible.
  explicit SimplicialCone(Matrix basis);

  static SimplicialCone standard(std::size_t dim);

  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const Matrix& basis_inverse() const noexcept { return basis_inverse_; }
  Vector generator(std::size_t j) const { return basis_.col(j); }
  bool is_standard() const noexcept { return standard_; }

  friend bool operator==(const SimplicialCone& a, const SimplicialCone& b) {
    return a.basis_ == b.basis_;
  }

 private:
  Matrix basis_;
  Matrix basis_inverse_;
  bool standard_ = false;
};

class LatticeSpace {
 public:
  explicit LatticeSpace(SimplicialCone cone, std::string label = {});

  static LatticeSpace standard(std::size_t dim);

  std::size_t dim() const noexcept { return cone_.dim(); }
  const SimplicialCone& cone() const noexcept { return cone_; }
  const std::string& label() const noexcept { return label_; }
  bool is_standard() const noexcept { return cone_.is_standard(); }

  friend bool operator==(const LatticeSpace& a, const LatticeSpace& b) {
    return a.cone_ == b.cone_;
  }

 private:
  SimplicialCone cone_;
  std::string label_;
};

LatticeSpace make_space(const Matrix& basis, std::string label = {});

Vector to_coords(const LatticeSpace& space, const Vector& v);
Vector from_coords(const LatticeSpace& space, const Vector& c);

Vector vec_sup(const LatticeSpace& space, const Vector& x, const Vector& y);
Vector vec_inf(const LatticeSpace& space, const Vector& x, const Vector& y);
Vector positive_part(const LatticeSpace& space, const Vector& x);
Vector negative_part(const LatticeSpace& space, const Vector& x);
Vector abs(const LatticeSpace& space, const Vector& x);

bool vec_leq(const LatticeSpace& space, const Vector& x, const Vector& y);
bool is_positive(const LatticeSpace& space, const Vector& x);
bool are_disjoint(const LatticeSpace& space, const Vector& x, const Vector& y);

/// Component of x in the band generated by e >= 0. Throws NotPositive when e
/// has a negative cone coordinate.
Vector band_project(const LatticeSpace& space, const Vector& e, const Vector& x);

}  // namespace vlat
