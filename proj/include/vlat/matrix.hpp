#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "vlat/scalar.hpp"

namespace vlat {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& entries);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Vector diagonal() const;
  Matrix transpose() const;
  Scalar trace() const;

  bool is_zero() const;
  bool is_nonnegative() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Scalar& s, const Matrix& a);
Vector operator*(const Matrix& a, const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

Vector zeros(std::size_t n);
Vector ones(std::size_t n);
bool is_zero(const Vector& v);
bool is_nonnegative(const Vector& v);

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Exact rank by Gaussian elimination.
std::size_t rank(const Matrix& m);

/// Coefficients a with sum_j a_j * columns[j] == target, or nullopt when
/// target is outside the span. Columns must be linearly independent.
std::optional<Vector> solve_combination(const std::vector<Vector>& columns, const Vector& target);

/// Block-diagonal direct sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Principal submatrix on the given index set (in the given order).
Matrix principal_submatrix(const Matrix& m, const std::vector<std::size_t>& indices);

}  // namespace vlat
