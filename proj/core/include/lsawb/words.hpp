#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lsawb/scalar.hpp"

namespace lsawb {

/// Word over {A, B}; may be empty.
using Word = std::string;

/// Validates letters. Accepts "" for the empty word.
Word parse_word(std::string_view text);

/// Orders words by length, then lexicographically.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Formal rational combination of words without zero coefficients.
class WordSum {
 public:
  WordSum() = default;
  explicit WordSum(const Word& w, const Scalar& c = 1) { add(w, c); }

  void add(const Word& w, const Scalar& c);
  const std::map<Word, Scalar, WordOrder>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;

  WordSum& operator+=(const WordSum& other);
  WordSum& operator-=(const WordSum& other);
  WordSum& operator*=(const Scalar& s);

  friend bool operator==(const WordSum&, const WordSum&) = default;

 private:
  std::map<Word, Scalar, WordOrder> terms_;
};

WordSum operator+(WordSum a, const WordSum& b);
WordSum operator-(WordSum a, const WordSum& b);

/// epsilon(x, i) for the pair (x[i], x[i+1]) with x[0] and x[l+1] empty:
/// -1 for (A,B); +1 for (B,A), (B,empty), (empty,A); 0 otherwise.
int epsilon(const Word& x, std::size_t i);

/// x with y spliced in between x[i] and x[i+1].
Word insert_at(const Word& x, std::size_t i, const Word& y);

/// Terms of x o y in insertion-position order, equal words merged at their
/// first position, zero results dropped.
std::vector<std::pair<Word, Scalar>> insertion_terms(const Word& x, const Word& y);

/// x o y = sum_i epsilon(i) x <-i y
WordSum insert_product(const Word& x, const Word& y);
WordSum insert_product(const WordSum& a, const WordSum& b);

/// (a o b) o c - a o (b o c)
WordSum word_associator(const WordSum& a, const WordSum& b, const WordSum& c);

/// "2ABAB - AABB". With `pretty`, runs are written with superscripts (A²B²).
std::string format_word(const Word& w, bool pretty = false);
std::string format_terms(const std::vector<std::pair<Word, Scalar>>& terms, bool pretty = false);
/// Canonical term order.
std::string to_string(const WordSum& s, bool pretty = false);

/// All words of length exactly n.
std::vector<Word> words_of_length(std::size_t n);

}  // namespace lsawb
