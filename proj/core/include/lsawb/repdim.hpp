#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lsawb/algebra.hpp"
#include "lsawb/lie.hpp"

namespace lsawb {

/// Linear representation of a Lie algebra: one d x d matrix per basis vector.
/// Construction checks rho([e_i, e_j]) = [rho(e_i), rho(e_j)] exactly and
/// throws IdentityViolation naming the first failing pair.
class Representation {
 public:
  Representation(LieAlgebra source, std::vector<Matrix> images);

  const LieAlgebra& source() const noexcept { return source_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Matrix>& images() const noexcept { return images_; }
  const Matrix& image(std::size_t i) const { return images_[i]; }
  /// rho(x) for an arbitrary element.
  Matrix act(const Vector& x) const;

  /// {x : rho(x) = 0}
  Subspace kernel() const;
  bool faithful() const { return kernel().is_zero(); }

 private:
  LieAlgebra source_;
  std::vector<Matrix> images_;
  std::size_t degree_ = 0;
};

/// First pair (i, j), i < j, with rho([e_i, e_j]) != [rho(e_i), rho(e_j)].
std::optional<std::pair<std::size_t, std::size_t>> bracket_compatibility_violation(
    const LieAlgebra& g, const std::vector<Matrix>& images);

Representation adjoint_representation(const LieAlgebra& g);
/// x -> L(x) on A, a representation of g_A when A is an LSA.
Representation left_representation(const Algebra& a);

/// Hom(g, M) is flattened as d x n matrices (column i = omega(e_i)),
/// row-major: entry (r, i) at r * n + i.
struct CocycleSpaces {
  Subspace z1;  // omega([x,y]) = x.omega(y) - y.omega(x)
  Subspace b1;  // omega(x) = x.m
};
CocycleSpaces cocycle_space(const Representation& rep);

/// x.y = phi^{-1}(theta(x) phi(y)) for a nonsingular phi in Z^1(theta), with
/// theta of degree dim g. Throws DomainError if phi is singular or not a cocycle.
Algebra lsa_from_cocycle(const Representation& theta, const Matrix& phi);

/// The module K x V with x.(v, t) = (x.v + t omega(x), 0), t the last
/// coordinate. Throws DomainError unless omega is a cocycle.
Representation faithful_extension(const Representation& theta, const Matrix& omega);

/// alpha(x) = [[L(x), x], [0, 0]] on A + K.
std::vector<Matrix> affine_images(const Algebra& a);
/// First pair where alpha fails to be bracket compatible, with the bracket
/// x*y - y*x. Empty exactly when A is left-symmetric.
std::optional<std::pair<std::size_t, std::size_t>> affine_violation(const Algebra& a);
/// Throws IdentityViolation naming the failing pair when A is not an LSA.
Representation affine_embedding(const Algebra& a);

/// D(x_i) = w_i x_i as a diagonal matrix.
Matrix diagonal_derivation(const std::vector<Scalar>& weights);

}  // namespace lsawb
