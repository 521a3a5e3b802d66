#include "lsawb/subspace.hpp"

#include "lsawb/error.hpp"

namespace lsawb {

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::full(std::size_t n) { return row_space(Matrix::identity(n)); }

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(vectors, n));
}

Subspace Subspace::row_space(const Matrix& m) {
  Rref r = rref(m);
  Subspace s(m.cols());
  s.basis_ = Matrix(r.rank, m.cols());
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) s.basis_(i, j) = r.reduced(i, j);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Scalar tmp;
  for (std::size_t r = 0; r < dim(); ++r) {
    const std::size_t p = pivots_[r];
    if (lsawb::is_zero(v[p])) continue;
    const Scalar factor = v[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (lsawb::is_zero(basis_(r, j))) continue;
      mpq_mul(tmp.get_mpq_t(), factor.get_mpq_t(), basis_(r, j).get_mpq_t());
      v[j] -= tmp;
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const { return lsawb::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionError("ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row_vector(r))) return false;
  }
  return true;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(n, vecs);
}

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  return kernel(vstack(a.constraints(), b.constraints()));
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  if (m.rows() != target.ambient_dim()) throw DimensionError("preimage shape mismatch");
  const Matrix c = target.constraints();
  if (c.rows() == 0) return Subspace::full(m.cols());
  return kernel(c * m);
}

Subspace apply(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient_dim()) throw DimensionError("apply shape mismatch");
  std::vector<Vector> images;
  for (const auto& b : s.basis_vectors()) images.push_back(m * b);
  return Subspace::span(m.rows(), images);
}

SubspacePair subspace_ops(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("ambient dimension mismatch");
  return SubspacePair{a + b, intersect(a, b), b.contains(a), a.contains(b)};
}

}  // namespace lsawb
