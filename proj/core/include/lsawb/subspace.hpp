#pragma once

#include <cstddef>
#include <vector>

#include "lsawb/matrix.hpp"

namespace lsawb {

/// A linear subspace of K^n, stored as the nonzero rows of its unique RREF
/// basis. Equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of K^n.
  explicit Subspace(std::size_t ambient_dim);

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors);
  /// Span of the rows of m.
  static Subspace row_space(const Matrix& m);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient_; }

  const Matrix& basis() const noexcept { return basis_; }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its components along the pivot columns; zero iff v lies in the space.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Orthogonal complement for the standard dot product.
  Subspace annihilator() const;

  /// Rows whose common kernel is this subspace.
  Matrix constraints() const { return annihilator().basis(); }

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}, of dimension cols - rank.
Subspace kernel(const Matrix& m);

/// Span of the columns of m.
Subspace image(const Matrix& m);

Subspace operator+(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// {x : m x in target}
Subspace preimage(const Matrix& m, const Subspace& target);

/// Image of a subspace under m.
Subspace apply(const Matrix& m, const Subspace& s);

/// Combined result of the pairwise subspace operations.
struct SubspacePair {
  Subspace sum;
  Subspace intersection;
  bool a_in_b = false;
  bool b_in_a = false;
};
SubspacePair subspace_ops(const Subspace& a, const Subspace& b);

}  // namespace lsawb
