#include "lsawb/trees.hpp"

#include <algorithm>
#include <cctype>

#include "lsawb/error.hpp"

namespace lsawb {

namespace {

bool valid_label(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  RootedTree parse() {
    RootedTree t = node();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, "column " + std::to_string(pos_ + 1));
  }

  RootedTree node() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (pos_ == start) fail("expected a vertex label");
    std::string label(text_.substr(start, pos_ - start));
    std::vector<RootedTree> kids;
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      while (true) {
        kids.push_back(node());
        if (pos_ >= text_.size()) fail("unterminated child list");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ']') {
          ++pos_;
          break;
        }
        fail("expected ',' or ']'");
      }
    }
    return RootedTree(std::move(label), std::move(kids));
  }
};

void graft_all(const RootedTree& t, const RootedTree& s, std::vector<RootedTree>& out) {
  auto kids = t.children();
  kids.push_back(s);
  out.emplace_back(t.label(), std::move(kids));
  for (std::size_t c = 0; c < t.children().size(); ++c) {
    // Equal siblings give equal results; the multiplicity is recorded by
    // visiting each of them.
    std::vector<RootedTree> sub;
    graft_all(t.children()[c], s, sub);
    for (auto& g : sub) {
      auto k2 = t.children();
      k2[c] = std::move(g);
      out.emplace_back(t.label(), std::move(k2));
    }
  }
}

template <class Op>
TreeSum bilinear(const TreeSum& a, const TreeSum& b, Op op) {
  TreeSum out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      TreeSum p = op(x, y);
      p *= cx * cy;
      out += p;
    }
  return out;
}

}  // namespace

RootedTree::RootedTree(std::string label) : RootedTree(std::move(label), {}) {}

RootedTree::RootedTree(std::string label, std::vector<RootedTree> children)
    : label_(std::move(label)), children_(std::move(children)) {
  if (!valid_label(label_)) throw ParseError("invalid vertex label '" + label_ + "'");
  std::sort(children_.begin(), children_.end());
  text_ = label_;
  if (!children_.empty()) {
    text_ += '[';
    for (std::size_t c = 0; c < children_.size(); ++c) {
      if (c) text_ += ',';
      text_ += children_[c].text_;
      size_ += children_[c].size_;
    }
    text_ += ']';
  }
}

RootedTree canonicalize(const RootedTree& t) { return t; }

RootedTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string to_string(const RootedTree& t) { return t.text(); }

void TreeSum::add(const RootedTree& t, const Scalar& c) {
  if (lsawb::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(t, c);
  if (!inserted) {
    it->second += c;
    if (lsawb::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar TreeSum::coefficient(const RootedTree& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar(0) : it->second;
}

Scalar TreeSum::mass() const {
  Scalar m = 0;
  for (const auto& [t, c] : terms_) m += c;
  return m;
}

TreeSum& TreeSum::operator+=(const TreeSum& other) {
  for (const auto& [t, c] : other.terms_) add(t, c);
  return *this;
}

TreeSum& TreeSum::operator-=(const TreeSum& other) {
  for (const auto& [t, c] : other.terms_) add(t, -c);
  return *this;
}

TreeSum& TreeSum::operator*=(const Scalar& s) {
  if (lsawb::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, c] : terms_) c *= s;
  return *this;
}

TreeSum operator+(TreeSum a, const TreeSum& b) { return a += b; }
TreeSum operator-(TreeSum a, const TreeSum& b) { return a -= b; }
TreeSum operator*(const Scalar& s, TreeSum t) { return t *= s; }

std::string to_string(const TreeSum& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [t, c] : s.terms()) {
    Scalar mag = abs(c);
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += t.text();
    first = false;
  }
  return out;
}

TreeSum graft_product(const RootedTree& t1, const RootedTree& t2) {
  std::vector<RootedTree> all;
  graft_all(t1, t2, all);
  TreeSum out;
  for (const auto& t : all) out.add(t, 1);
  return out;
}

TreeSum graft_product(const TreeSum& a, const TreeSum& b) {
  return bilinear(a, b, [](const RootedTree& x, const RootedTree& y) { return graft_product(x, y); });
}

TreeSum graft_associator(const TreeSum& a, const TreeSum& b, const TreeSum& c) {
  return graft_product(graft_product(a, b), c) - graft_product(a, graft_product(b, c));
}

RootedTree labelled_bullet(const RootedTree& t, const RootedTree& y) {
  auto kids = t.children();
  kids.push_back(y);
  return RootedTree(t.label(), std::move(kids));
}

TreeSum labelled_bullet(const TreeSum& t, const TreeSum& y) {
  return bilinear(t, y, [](const RootedTree& a, const RootedTree& b) { return TreeSum(labelled_bullet(a, b)); });
}

TreeSum labelled_circ(const RootedTree& t, const RootedTree& y) {
  TreeSum out(labelled_bullet(t, y));
  const auto& kids = t.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    auto rest = kids;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    out += labelled_bullet(TreeSum(RootedTree(t.label(), std::move(rest))), labelled_circ(kids[i], y));
  }
  return out;
}

TreeSum labelled_circ(const TreeSum& t, const TreeSum& y) {
  return bilinear(t, y, [](const RootedTree& a, const RootedTree& b) { return labelled_circ(a, b); });
}

std::vector<RootedTree> enumerate_trees(std::size_t m) {
  if (m < 1 || m > kMaxTreeOrder)
    throw DomainError("tree order must lie in 1.." + std::to_string(kMaxTreeOrder));
  // by_order[k]: all trees with k vertices, in canonical order.
  std::vector<std::vector<RootedTree>> by_order(m + 1);
  by_order[1].emplace_back();
  for (std::size_t k = 2; k <= m; ++k) {
    // Children form a multiset: choose them in nonincreasing (order, index).
    std::vector<RootedTree> kids;
    auto rec = [&](auto&& self, std::size_t remaining, std::size_t max_order, std::size_t max_index) -> void {
      if (remaining == 0) {
        by_order[k].emplace_back("o", kids);
        return;
      }
      for (std::size_t o = std::min(remaining, max_order); o >= 1; --o) {
        const std::size_t limit = (o == max_order) ? max_index : by_order[o].size() - 1;
        for (std::size_t idx = 0; idx <= limit; ++idx) {
          kids.push_back(by_order[o][idx]);
          self(self, remaining - o, o, idx);
          kids.pop_back();
        }
      }
    };
    rec(rec, k - 1, k - 1, by_order[k - 1].size() - 1);
    std::sort(by_order[k].begin(), by_order[k].end());
  }
  return by_order[m];
}

}  // namespace lsawb
