#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "lsawb/scalar.hpp"

namespace lsawb {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  const std::vector<Scalar>& entries() const noexcept { return data_; }

  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;

  /// Flattened entries as a vector of length rows*cols.
  Vector flatten() const { return data_; }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Scalar& s);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Scalar& s, Matrix m);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, const Vector& v);

/// a*b - b*a
Matrix commutator(const Matrix& a, const Matrix& b);

/// Result of Gauss-Jordan elimination.
struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row-echelon form. Pivot search scans columns left to right
/// and takes the first row holding a nonzero entry.
Rref rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Determinant by exact elimination. Requires a square matrix.
Scalar determinant(Matrix m);

/// Inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Some x with m*x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Block stacking: rows of `top` followed by rows of `bottom`.
Matrix vstack(const Matrix& top, const Matrix& bottom);

}  // namespace lsawb
