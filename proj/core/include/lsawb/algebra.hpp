#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsawb/matrix.hpp"
#include "lsawb/scalar.hpp"
#include "lsawb/subspace.hpp"

namespace lsawb {

/// One structure constant: e_i * e_j has coefficient c on e_k. Indices are
/// 0-based in memory; documents and reports use 1-based indices.
struct StructureConstant {
  std::size_t i = 0, j = 0, k = 0;
  Scalar c;
  friend bool operator==(const StructureConstant&, const StructureConstant&) = default;
};

/// Basis triple (e_i, e_j, e_k), 0-based.
struct Triple {
  std::size_t i = 0, j = 0, k = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
};

/// Finite-dimensional algebra given by structure constants over the rationals.
///
/// Entries are canonicalized on construction: duplicates are summed, zero
/// coefficients dropped and the rest sorted by (i, j, k), so two algebras with
/// the same product compare equal regardless of how their tables were written.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, std::size_t dim, std::vector<StructureConstant> entries);

  static Algebra zero(std::size_t dim, std::string name = "zero");

  const std::string& name() const noexcept { return name_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<StructureConstant>& entries() const noexcept { return entries_; }

  /// e_i * e_j
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const { return products_[i * dim_ + j][k]; }
  bool has_zero_product() const noexcept { return entries_.empty(); }

  Algebra renamed(std::string name) const;

  /// Structural equality of the tables; names are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) { return a.dim_ == b.dim_ && a.entries_ == b.entries_; }

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::vector<StructureConstant> entries_;
  std::vector<Vector> products_;
};

Vector multiply(const Algebra& a, const Vector& x, const Vector& y);

/// (x*y)*z - x*(y*z)
Vector associator(const Algebra& a, const Vector& x, const Vector& y, const Vector& z);

/// The algebra with product x o y = y * x.
Algebra opposite(const Algebra& a);

/// Same algebra written in the basis f_j = sum_i p(i, j) e_i. Throws if p is singular.
Algebra transform_basis(const Algebra& a, const Matrix& p);

/// Relabels e_i as e_{perm[i]}.
Algebra permute_basis(const Algebra& a, const std::vector<std::size_t>& perm);

/// First basis triple with (x,y,z) != (y,x,z), scanning i, j, k in order.
std::optional<Triple> left_symmetry_violation(const Algebra& a);
/// First basis triple with (x,y,z) != (x,z,y).
std::optional<Triple> right_symmetry_violation(const Algebra& a);
/// First basis triple with x*(y*z) != y*(x*z).
std::optional<Triple> novikov_violation(const Algebra& a);
std::optional<Triple> associativity_violation(const Algebra& a);

inline bool is_left_symmetric(const Algebra& a) { return !left_symmetry_violation(a); }
inline bool is_right_symmetric(const Algebra& a) { return !right_symmetry_violation(a); }
/// Left multiplications commute (the right Novikov identity).
inline bool is_right_novikov(const Algebra& a) { return !novikov_violation(a); }
inline bool is_associative(const Algebra& a) { return !associativity_violation(a); }
bool is_commutative(const Algebra& a);

/// L(x) y = x*y
Matrix left_mult(const Algebra& a, const Vector& x);
/// R(x) y = y*x
Matrix right_mult(const Algebra& a, const Vector& x);
Matrix left_mult(const Algebra& a, std::size_t i);
Matrix right_mult(const Algebra& a, std::size_t i);

struct MultiplicationOperators {
  Matrix left;
  Matrix right;
};
MultiplicationOperators left_right_ops(const Algebra& a, const Vector& x);

/// Der(A) = {D : D(x*y) = D(x)*y + x*D(y)}, solved directly from the
/// structure constants. D is flattened row-major (entry (r, c) at r*n + c).
Subspace derivations(const Algebra& a);

/// Reshapes a row-major flattened n*n vector into a matrix.
Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols);

}  // namespace lsawb
