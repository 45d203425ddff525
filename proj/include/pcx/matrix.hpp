#pragma once

// Dense matrices over a Field, with exact row reduction.
//
// The parallel kernels (multiply, row reduction) live in namespace pcx; the
// serial reference implementations they are tested against live in
// pcx::serial.

#include "pcx/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace pcx {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_ints(Field f, const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix column(std::size_t j) const { return block(0, j, rows_, 1); }
  Matrix select_columns(const std::vector<std::size_t>& cols) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix operator-() const;
  Matrix scaled(const Scalar& s) const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;                   // transform * A, reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  Matrix transform;                 // invertible, rows(A) x rows(A)
  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Solution set of A x = b: particular + span(nullspace columns).
struct Solution {
  Matrix particular;
  Matrix nullspace;
};

RrefResult rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Columns form a basis of ker A. Free variables set to unit vectors in increasing order.
Matrix nullspace(const Matrix& a);
/// nullopt when b is not in the column space of A. Free variables of the particular solution are 0.
std::optional<Solution> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
Scalar determinant(const Matrix& a);
/// Indices of a maximal set of linearly independent columns (leftmost first).
std::vector<std::size_t> independent_columns(const Matrix& a);
/// Indices of columns of `b` that extend the column span of `a` to span(a|b), leftmost first.
std::vector<std::size_t> extend_basis(const Matrix& a, const Matrix& b);

namespace serial {
Matrix multiply(const Matrix& a, const Matrix& b);
RrefResult rref(const Matrix& a);
}  // namespace serial

}  // namespace pcx
