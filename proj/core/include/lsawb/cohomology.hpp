#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lsawb/algebra.hpp"

namespace lsawb {

/// Multilinear map A^p -> A stored densely. Entry (i_1, ..., i_p, k) is the
/// e_k coefficient of f(e_{i_1}, ..., e_{i_p}), flattened row-major.
class Cochain {
 public:
  Cochain() = default;
  Cochain(std::size_t degree, std::size_t base_dim);

  /// The product of A as a degree-2 cochain.
  static Cochain from_algebra(const Algebra& a);
  static Cochain identity(std::size_t n);
  /// Degree-0 cochain with value v.
  static Cochain constant(const Vector& v);
  static Cochain random(std::size_t degree, std::size_t n, SampleSource& src);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t base_dim() const noexcept { return n_; }
  /// Gerstenhaber grading |f| = degree - 1.
  long grading() const noexcept { return static_cast<long>(degree_) - 1; }

  const std::vector<Scalar>& entries() const noexcept { return data_; }
  std::vector<Scalar>& entries() noexcept { return data_; }

  /// Flat offset of (args..., 0).
  std::size_t offset(const std::vector<std::size_t>& args) const;
  /// f(e_{args...})
  Vector value(const std::vector<std::size_t>& args) const;
  /// f(x_1, ..., x_p) on arbitrary vectors.
  Vector evaluate(const std::vector<Vector>& args) const;

  bool is_zero() const;

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Scalar& s);

  friend bool operator==(const Cochain&, const Cochain&) = default;

 private:
  std::size_t degree_ = 0;
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

Cochain operator+(Cochain a, const Cochain& b);
Cochain operator-(Cochain a, const Cochain& b);
Cochain operator*(const Scalar& s, Cochain f);

/// Highest cochain degree accepted by the LSA coboundary.
inline constexpr std::size_t kMaxLsaDegree = 3;
/// Bounds for the composition products: output degree at most 4 and at most
/// 3^5 output entries.
inline constexpr std::size_t kMaxComposeDegree = 4;
inline constexpr std::size_t kMaxComposeEntries = 243;

/// Coboundary of the LSA complex C^p(A,A) -> C^{p+1}(A,A), p <= 3.
Cochain lsa_coboundary(const Algebra& a, const Cochain& f);

/// Sparse matrix as a list of rows of (column, value) pairs.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> data;

  Vector apply(const Vector& x) const;
  Matrix dense() const;
};

/// Exact rank by sparse elimination.
std::size_t rank(const SparseMatrix& m);

/// The matrix of delta^p on flattened cochains, built term by term from the
/// structure constants without evaluating cochains.
SparseMatrix lsa_coboundary_matrix(const Algebra& a, std::size_t p);

struct CohomologyDims {
  std::size_t degree = 0;
  std::size_t dim_c = 0;
  std::size_t dim_z = 0;
  std::size_t dim_b = 0;
  std::size_t dim_h = 0;
};

/// dim Z^p, B^p and H^p of the LSA complex for p in {1, 2, 3}. The complex
/// starts at C^1, so B^1 = 0.
CohomologyDims lsa_cohomology(const Algebra& a, std::size_t p);

/// Z^1 = ker delta^1 in the cochain layout: entry i*n + k is the e_k
/// coefficient of f(e_i).
Subspace lsa_cocycles_1(const Algebra& a);

/// (f o_i g)(x_1..x_{p+q-1}) = f(x_1..x_{i-1}, g(x_i..x_{i+q-1}), ..), i 1-based.
Cochain compose_at(const Cochain& f, const Cochain& g, std::size_t i);

/// sum_i (-1)^{(q-1)(i-1)} f o_i g
Cochain compose_signed(const Cochain& f, const Cochain& g);
/// sum_i f o_i g
Cochain compose_unsigned(const Cochain& f, const Cochain& g);

/// [[f, g]] = f o g - (-1)^{|f||g|} g o f
Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g);

/// d(f) = -[[mu, f]]. Throws DomainError unless mu o mu = 0.
Cochain hochschild_d(const Cochain& mu, const Cochain& f);

}  // namespace lsawb
