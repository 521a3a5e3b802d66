#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lsawb/algebra.hpp"

namespace lsawb {

/// Lie algebra by structure constants. Construction verifies antisymmetry and
/// the Jacobi identity exactly and throws IdentityViolation otherwise.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(std::string name, std::size_t dim, std::vector<StructureConstant> brackets);

  const std::string& name() const noexcept { return table_.name(); }
  std::size_t dim() const noexcept { return table_.dim(); }
  const std::vector<StructureConstant>& entries() const noexcept { return table_.entries(); }

  /// [e_i, e_j]
  const Vector& bracket(std::size_t i, std::size_t j) const { return table_.product(i, j); }
  Vector bracket(const Vector& x, const Vector& y) const { return multiply(table_, x, y); }

  /// ad(x) y = [x, y]
  Matrix ad(const Vector& x) const { return left_mult(table_, x); }
  Matrix ad(std::size_t i) const { return left_mult(table_, i); }

  /// The bracket viewed as a (non-associative) product table.
  const Algebra& table() const noexcept { return table_; }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.table_ == b.table_; }

 private:
  Algebra table_;
};

/// First triple violating Jacobi for the given product table read as a bracket.
std::optional<Triple> jacobi_violation(const Algebra& brackets);

/// The commutator algebra g_A with [x,y] = x*y - y*x. Throws IdentityViolation
/// naming the failing triple when the commutator is not a Lie bracket.
LieAlgebra commutator_lie(const Algebra& a);

/// span{[u, v] : u in U, v in V}
Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v);

struct LieProperties {
  bool abelian = false;
  bool nilpotent = false;
  bool solvable = false;
  /// Smallest c with g^{c+1} = 0; empty when not nilpotent.
  std::optional<std::size_t> nilpotency_class;
  /// Smallest k with g^{(k)} = 0; empty when not solvable.
  std::optional<std::size_t> derived_length;
  Subspace center;
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_dims;
};

LieProperties lie_properties(const LieAlgebra& g);

/// Lie derivations of g, flattened row-major.
Subspace lie_derivations(const LieAlgebra& g);

/// True iff L : g -> gl(A) is a Lie homomorphism and the identity is a
/// 1-cocycle for the module g_L. Uses the commutator of A as the bracket when
/// none is supplied.
bool check_L_is_representation(const Algebra& a, const LieAlgebra* bracket = nullptr);

}  // namespace lsawb
