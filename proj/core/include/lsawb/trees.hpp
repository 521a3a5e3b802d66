#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lsawb/scalar.hpp"

namespace lsawb {

/// Rooted tree with labelled vertices. Children are kept sorted, so every
/// value is in canonical form and isomorphic trees compare equal.
///
/// Text form: `label[child,child,...]` with `[]` omitted for leaves; `o` is
/// the label of an unlabelled vertex. Labels are nonempty runs of letters,
/// digits and underscores.
class RootedTree {
 public:
  /// A single vertex.
  explicit RootedTree(std::string label = "o");
  /// T(v, x_1, ..., x_n): a root labelled v with the given subtrees.
  RootedTree(std::string label, std::vector<RootedTree> children);

  const std::string& label() const noexcept { return label_; }
  const std::vector<RootedTree>& children() const noexcept { return children_; }
  /// Number of vertices.
  std::size_t size() const noexcept { return size_; }
  const std::string& text() const noexcept { return text_; }

  /// Canonical order: vertex count, then text.
  friend bool operator<(const RootedTree& a, const RootedTree& b) {
    return a.size_ != b.size_ ? a.size_ < b.size_ : a.text_ < b.text_;
  }
  friend bool operator==(const RootedTree& a, const RootedTree& b) { return a.text_ == b.text_; }

 private:
  std::string label_;
  std::vector<RootedTree> children_;
  std::size_t size_ = 1;
  std::string text_;
};

/// Returns t; trees are canonical by construction.
RootedTree canonicalize(const RootedTree& t);

/// Parses the text form in any child order. Throws ParseError.
RootedTree parse_tree(std::string_view text);
std::string to_string(const RootedTree& t);

/// Formal rational combination of trees, without zero coefficients.
class TreeSum {
 public:
  TreeSum() = default;
  explicit TreeSum(const RootedTree& t, const Scalar& c = 1) { add(t, c); }

  void add(const RootedTree& t, const Scalar& c);
  const std::map<RootedTree, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const RootedTree& t) const;
  /// Sum of the coefficients.
  Scalar mass() const;

  TreeSum& operator+=(const TreeSum& other);
  TreeSum& operator-=(const TreeSum& other);
  TreeSum& operator*=(const Scalar& s);

  friend bool operator==(const TreeSum&, const TreeSum&) = default;

 private:
  std::map<RootedTree, Scalar> terms_;
};

TreeSum operator+(TreeSum a, const TreeSum& b);
TreeSum operator-(TreeSum a, const TreeSum& b);
TreeSum operator*(const Scalar& s, TreeSum t);

/// "c*tree + ..." in canonical term order; "0" for the empty sum.
std::string to_string(const TreeSum& s);

/// Sum over the vertices v of t1 of t1 with t2's root attached below v.
TreeSum graft_product(const RootedTree& t1, const RootedTree& t2);
TreeSum graft_product(const TreeSum& a, const TreeSum& b);

/// (t1, t2, t3) = (t1 t2) t3 - t1 (t2 t3) for the grafting product.
TreeSum graft_associator(const TreeSum& a, const TreeSum& b, const TreeSum& c);

/// T(v, x_1..x_n) . y = T(v, x_1..x_n, y): y becomes a child of the root.
RootedTree labelled_bullet(const RootedTree& t, const RootedTree& y);
TreeSum labelled_bullet(const TreeSum& t, const TreeSum& y);

/// T(v, x_1..x_n) o y = T(v, x_1..x_n, y) + sum_i T(v, x_1..^x_i..x_n) . (x_i o y)
TreeSum labelled_circ(const RootedTree& t, const RootedTree& y);
TreeSum labelled_circ(const TreeSum& t, const TreeSum& y);

inline constexpr std::size_t kMaxTreeOrder = 8;

/// All unlabelled rooted trees with m vertices, 1 <= m <= 8, canonical order.
std::vector<RootedTree> enumerate_trees(std::size_t m);

}  // namespace lsawb
