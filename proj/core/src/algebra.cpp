#include "lsawb/algebra.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "lsawb/error.hpp"

namespace lsawb {

Algebra::Algebra(std::string name, std::size_t dim, std::vector<StructureConstant> entries)
    : name_(std::move(name)), dim_(dim) {
  if (dim == 0) throw DomainError("algebra dimension must be at least 1");
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> acc;
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw DomainError("structure constant index out of range in '" + name_ + "'");
    }
    acc[{e.i, e.j, e.k}] += e.c;
  }
  products_.assign(dim * dim, Vector(dim));
  for (const auto& [key, c] : acc) {
    if (lsawb::is_zero(c)) continue;
    const auto [i, j, k] = key;
    entries_.push_back({i, j, k, c});
    products_[i * dim + j][k] = c;
  }
}

Algebra Algebra::zero(std::size_t dim, std::string name) { return Algebra(std::move(name), dim, {}); }

Algebra Algebra::renamed(std::string name) const {
  Algebra copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

namespace {

void check_dim(const Algebra& a, const Vector& v) {
  if (v.size() != a.dim()) throw DimensionError("vector length does not match algebra dimension");
}

/// (e_i e_j) e_k - e_i (e_j e_k)
Vector basis_associator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = a.dim();
  Vector r(n);
  const Vector& ij = a.product(i, j);
  const Vector& jk = a.product(j, k);
  for (std::size_t m = 0; m < n; ++m) {
    if (!is_zero(ij[m])) {
      const Vector& mk = a.product(m, k);
      for (std::size_t t = 0; t < n; ++t)
        if (!is_zero(mk[t])) r[t] += ij[m] * mk[t];
    }
    if (!is_zero(jk[m])) {
      const Vector& im = a.product(i, m);
      for (std::size_t t = 0; t < n; ++t)
        if (!is_zero(im[t])) r[t] -= jk[m] * im[t];
    }
  }
  return r;
}

template <typename Pred>
std::optional<Triple> first_violation(const Algebra& a, Pred&& holds) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!holds(i, j, k)) return Triple{i, j, k};
  return std::nullopt;
}

}  // namespace

Vector multiply(const Algebra& a, const Vector& x, const Vector& y) {
  check_dim(a, x);
  check_dim(a, y);
  Vector r(a.dim());
  Scalar tmp;
  for (const auto& e : a.entries()) {
    if (is_zero(x[e.i]) || is_zero(y[e.j])) continue;
    tmp = e.c * x[e.i];
    tmp *= y[e.j];
    r[e.k] += tmp;
  }
  return r;
}

Vector associator(const Algebra& a, const Vector& x, const Vector& y, const Vector& z) {
  check_dim(a, z);
  return multiply(a, multiply(a, x, y), z) - multiply(a, x, multiply(a, y, z));
}

Algebra opposite(const Algebra& a) {
  std::vector<StructureConstant> e;
  for (const auto& s : a.entries()) e.push_back({s.j, s.i, s.k, s.c});
  return Algebra(a.name() + "^op", a.dim(), std::move(e));
}

Algebra transform_basis(const Algebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionError("basis change has the wrong shape");
  const auto pinv = inverse(p);
  if (!pinv) throw DomainError("basis change matrix is singular");
  std::vector<StructureConstant> e;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Vector v = *pinv * multiply(a, p.column(x), p.column(y));
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(v[k])) e.push_back({x, y, k, v[k]});
    }
  }
  return Algebra(a.name(), n, std::move(e));
}

Algebra permute_basis(const Algebra& a, const std::vector<std::size_t>& perm) {
  if (perm.size() != a.dim()) throw DimensionError("permutation has the wrong length");
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) throw DomainError("not a permutation");
    seen[p] = true;
  }
  std::vector<StructureConstant> e;
  for (const auto& s : a.entries()) e.push_back({perm[s.i], perm[s.j], perm[s.k], s.c});
  return Algebra(a.name(), a.dim(), std::move(e));
}

std::optional<Triple> left_symmetry_violation(const Algebra& a) {
  return first_violation(a, [&](std::size_t i, std::size_t j, std::size_t k) {
    return i >= j || basis_associator(a, i, j, k) == basis_associator(a, j, i, k);
  });
}

std::optional<Triple> right_symmetry_violation(const Algebra& a) {
  return first_violation(a, [&](std::size_t i, std::size_t j, std::size_t k) {
    return j >= k || basis_associator(a, i, j, k) == basis_associator(a, i, k, j);
  });
}

std::optional<Triple> novikov_violation(const Algebra& a) {
  const std::size_t n = a.dim();
  return first_violation(a, [&](std::size_t i, std::size_t j, std::size_t k) {
    if (i >= j) return true;
    return multiply(a, unit_vector(n, i), a.product(j, k)) == multiply(a, unit_vector(n, j), a.product(i, k));
  });
}

std::optional<Triple> associativity_violation(const Algebra& a) {
  return first_violation(a, [&](std::size_t i, std::size_t j, std::size_t k) {
    return lsawb::is_zero(basis_associator(a, i, j, k));
  });
}

bool is_commutative(const Algebra& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

Matrix left_mult(const Algebra& a, const Vector& x) {
  check_dim(a, x);
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (const auto& e : a.entries()) {
    if (!is_zero(x[e.i])) m(e.k, e.j) += e.c * x[e.i];
  }
  return m;
}

Matrix right_mult(const Algebra& a, const Vector& x) {
  check_dim(a, x);
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (const auto& e : a.entries()) {
    if (!is_zero(x[e.j])) m(e.k, e.i) += e.c * x[e.j];
  }
  return m;
}

Matrix left_mult(const Algebra& a, std::size_t i) { return left_mult(a, unit_vector(a.dim(), i)); }
Matrix right_mult(const Algebra& a, std::size_t i) { return right_mult(a, unit_vector(a.dim(), i)); }

MultiplicationOperators left_right_ops(const Algebra& a, const Vector& x) {
  return {left_mult(a, x), right_mult(a, x)};
}

Subspace derivations(const Algebra& a) {
  const std::size_t n = a.dim();
  auto var = [n](std::size_t r, std::size_t c) { return r * n + c; };
  Matrix eqs(n * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k, ++row) {
        // D(e_i e_j)_k - (D(e_i) e_j)_k - (e_i D(e_j))_k = 0
        for (std::size_t m = 0; m < n; ++m) eqs(row, var(k, m)) += a.coefficient(i, j, m);
        for (std::size_t r = 0; r < n; ++r) {
          eqs(row, var(r, i)) -= a.coefficient(r, j, k);
          eqs(row, var(r, j)) -= a.coefficient(i, r, k);
        }
      }
    }
  }
  return kernel(eqs);
}

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionError("cannot reshape vector");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

}  // namespace lsawb
