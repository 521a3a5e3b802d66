#pragma once

#include <cstddef>
#include <vector>

#include "lsawb/matrix.hpp"
#include "lsawb/subspace.hpp"

namespace lsawb::detail {

/// Incrementally grown echelon basis. Each stored row has a pivot entry 1 and
/// zeros in the pivot columns of earlier rows, so reduction is one pass.
class Echelon {
 public:
  explicit Echelon(std::size_t ambient) : ambient_(ambient) {}

  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }

  /// v minus its projection; zero iff v already lies in the span.
  Vector reduce(Vector v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (sgn(v[p]) == 0) continue;
      const Scalar f = v[p];
      const Vector& row = rows_[r];
      for (std::size_t c = 0; c < ambient_; ++c)
        if (sgn(row[c]) != 0) v[c] -= f * row[c];
    }
    return v;
  }

  /// Adds v if it is independent. Returns true when the span grew.
  bool insert(const Vector& v) {
    Vector w = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && sgn(w[p]) == 0) ++p;
    if (p == ambient_) return false;
    const Scalar inv = 1 / w[p];
    for (auto& x : w) x *= inv;
    for (auto& row : rows_) {
      if (sgn(row[p]) == 0) continue;
      const Scalar f = row[p];
      for (std::size_t c = 0; c < ambient_; ++c)
        if (sgn(w[c]) != 0) row[c] -= f * w[c];
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(p);
    return true;
  }

  bool contains(const Vector& v) const {
    const Vector w = reduce(v);
    for (const auto& x : w)
      if (sgn(x) != 0) return false;
    return true;
  }

  const std::vector<Vector>& rows() const noexcept { return rows_; }

  Subspace subspace() const { return Subspace::span(ambient_, rows_); }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Smallest subspace containing `seeds` and stable under every operator.
inline Subspace spin(const std::vector<Matrix>& ops, const std::vector<Vector>& seeds, std::size_t n) {
  Echelon e(n);
  std::vector<Vector> work;
  for (const auto& s : seeds)
    if (e.insert(s)) work.push_back(s);
  while (!work.empty() && e.dim() < n) {
    Vector v = std::move(work.back());
    work.pop_back();
    for (const auto& op : ops) {
      Vector w = op * v;
      if (e.insert(w)) work.push_back(std::move(w));
    }
  }
  return e.subspace();
}

}  // namespace lsawb::detail
