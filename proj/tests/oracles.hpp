#pragma once

// Independent reference computations. Nothing here calls the library's
// algorithms under test; only its value types are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lsawb/algebra.hpp"
#include "lsawb/matrix.hpp"
#include "lsawb/poly.hpp"
#include "lsawb/scalar.hpp"

namespace oracle {

using lsawb::Integer;
using lsawb::Matrix;
using lsawb::Scalar;
using lsawb::Vector;

/// Rank by Bareiss fraction-free elimination on the integer matrix obtained by
/// clearing denominators row by row.
inline std::size_t bareiss_rank(const Matrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < cols; ++c) l = lcm(l, Integer(m(r, c).get_den()));
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = Integer(m(r, c).get_num() * (l / m(r, c).get_den()));
  }
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline Matrix stack(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() + b.rows(), std::max(a.cols(), b.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, c) = b(r, c);
  return out;
}

/// True iff `reduced` is in reduced row-echelon form (zero rows last).
inline bool is_rref(const Matrix& reduced) {
  long last_pivot = -1;
  bool seen_zero = false;
  for (std::size_t r = 0; r < reduced.rows(); ++r) {
    long pivot = -1;
    for (std::size_t c = 0; c < reduced.cols(); ++c)
      if (sgn(reduced(r, c)) != 0) {
        pivot = static_cast<long>(c);
        break;
      }
    if (pivot < 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero || pivot <= last_pivot || reduced(r, pivot) != 1) return false;
    for (std::size_t q = 0; q < reduced.rows(); ++q)
      if (q != r && sgn(reduced(q, pivot)) != 0) return false;
    last_pivot = pivot;
  }
  return true;
}

/// Laplace expansion along the first row; works for any ring type T with
/// +, -, * and a zero/one supplied by the caller.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m, const T& zero) {
  const std::size_t n = m.size();
  if (n == 0) return zero;
  if (n == 1) return m[0][0];
  T total = zero;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<T>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const T term = m[0][c] * cofactor_det(minor, zero);
    if (c % 2 == 0) total = total + term;
    else total = total - term;
  }
  return total;
}

inline Scalar cofactor_det(const Matrix& m) {
  std::vector<std::vector<Scalar>> rows(m.rows(), std::vector<Scalar>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m(r, c);
  return cofactor_det(rows, Scalar(0));
}

/// det(tI - m) by cofactor expansion over polynomial entries.
inline lsawb::Poly cofactor_char_poly(const Matrix& m) {
  using lsawb::Poly;
  std::vector<std::vector<Poly>> rows(m.rows(), std::vector<Poly>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      rows[r][c] = r == c ? Poly{-m(r, c), Scalar(1)} : Poly{-m(r, c)};
  return cofactor_det(rows, Poly());
}

/// Partition numbers by listing every partition (non-increasing sequences).
inline std::vector<Integer> partitions_by_enumeration(std::size_t upto) {
  std::vector<Integer> out;
  for (std::size_t n = 0; n <= upto; ++n) {
    std::size_t count = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t max_part) {
      if (left == 0) {
        ++count;
        return;
      }
      for (std::size_t part = std::min(left, max_part); part >= 1; --part) rec(left - part, part);
    };
    rec(n, n);
    out.emplace_back(static_cast<unsigned long>(count));
  }
  return out;
}

/// Rooted-tree counts (1, 1, 2, 4, 9, ...) from the recurrence
/// a(n+1) = (1/n) sum_{k=1..n} (sum_{d | k} d a(d)) a(n-k+1).
inline std::vector<Integer> rooted_tree_numbers(std::size_t upto) {
  std::vector<Integer> a(upto + 1, 0);
  if (upto >= 1) a[1] = 1;
  for (std::size_t n = 1; n < upto; ++n) {
    Integer s = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      Integer inner = 0;
      for (std::size_t d = 1; d <= k; ++d)
        if (k % d == 0) inner += Integer(static_cast<unsigned long>(d)) * a[d];
      s += inner * a[n - k + 1];
    }
    a[n + 1] = s / static_cast<unsigned long>(n);
  }
  return a;
}

/// Canonical string of an unlabelled rooted tree given by a parent array
/// (parent[0] unused, vertex 0 is the root).
inline std::string canonical_from_parents(const std::vector<int>& parent) {
  const std::size_t n = parent.size();
  std::vector<std::vector<int>> kids(n);
  for (std::size_t v = 1; v < n; ++v) kids[parent[v]].push_back(static_cast<int>(v));
  std::function<std::string(int)> code = [&](int v) {
    std::vector<std::string> parts;
    for (int c : kids[v]) parts.push_back(code(c));
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  };
  return code(0);
}

/// Distinct unlabelled rooted trees on m vertices, by brute force over all
/// parent arrays with parent[v] < v (every rooted tree has such a labelling).
inline std::size_t brute_force_tree_count(std::size_t m) {
  std::set<std::string> seen;
  std::vector<int> parent(m, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == m) {
      seen.insert(canonical_from_parents(parent));
      return;
    }
    for (std::size_t p = 0; p < v; ++p) {
      parent[v] = static_cast<int>(p);
      rec(v + 1);
    }
  };
  if (m == 0) return 0;
  rec(1);
  return seen.size();
}

/// Derivations D with D(e_i e_j) = D(e_i) e_j + e_i D(e_j), solved directly:
/// unknown d_{ki} is the e_k coefficient of D(e_i). Returns the dimension.
inline std::size_t derivation_dimension(const lsawb::Algebra& a) {
  const std::size_t n = a.dim();
  auto var = [n](std::size_t k, std::size_t i) { return k * n + i; };
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        Vector row(n * n);
        // D(e_i e_j)_m = sum_k c_ij^k d_{m k}
        for (std::size_t k = 0; k < n; ++k) row[var(m, k)] += a.coefficient(i, j, k);
        // - (D e_i) e_j - e_i (D e_j)
        for (std::size_t k = 0; k < n; ++k) {
          row[var(k, i)] -= a.coefficient(k, j, m);
          row[var(k, j)] -= a.coefficient(i, k, m);
        }
        rows.push_back(std::move(row));
      }
  return n * n - bareiss_rank(Matrix::from_rows(rows, n * n));
}

/// Product in A on coordinate vectors, from the raw structure constants.
inline Vector mul(const lsawb::Algebra& a, const Vector& x, const Vector& y) {
  Vector out(a.dim());
  for (const auto& e : a.entries()) out[e.k] += x[e.i] * y[e.j] * e.c;
  return out;
}

}  // namespace oracle
