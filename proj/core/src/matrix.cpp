#include "lsawb/matrix.hpp"

#include <algorithm>

#include "lsawb/error.hpp"

namespace lsawb {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * cols));
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Scalar Matrix::trace() const {
  if (!square()) throw DimensionError("trace of a non-square matrix");
  Scalar t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& x) { return lsawb::is_zero(x); });
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  Scalar tmp;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (is_zero(bkj)) continue;
        mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
        c(i, j) += tmp;
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector r(m.rows());
  Scalar tmp;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_zero(v[j])) continue;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (is_zero(m(i, j))) continue;
      mpq_mul(tmp.get_mpq_t(), m(i, j).get_mpq_t(), v[j].get_mpq_t());
      r[i] += tmp;
    }
  }
  return r;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

Rref rref(Matrix m) {
  Rref out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead = 0;
  std::vector<std::size_t> nz;
  Scalar inv, tmp;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t p = lead;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    swap_rows(m, lead, p);
    inv = 1 / m(lead, c);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (!is_zero(m(lead, j))) {
        m(lead, j) *= inv;
        nz.push_back(j);
      }
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || is_zero(m(r, c))) continue;
      const Scalar factor = m(r, c);
      for (std::size_t j : nz) {
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), m(lead, j).get_mpq_t());
        m(r, j) -= tmp;
      }
    }
    out.pivots.push_back(c);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar determinant(Matrix m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Scalar det = 1;
  Scalar tmp;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return 0;
    if (p != c) {
      swap_rows(m, p, c);
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (is_zero(m(r, c))) continue;
      const Scalar factor = m(r, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) {
        if (is_zero(m(c, j))) continue;
        mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), m(c, j).get_mpq_t());
        m(r, j) -= tmp;
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Rref r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.reduced(i, m.cols());
  return x;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionError("vstack column mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(r, c) = top(r, c);
  for (std::size_t r = 0; r < bottom.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) m(top.rows() + r, c) = bottom(r, c);
  return m;
}

}  // namespace lsawb
