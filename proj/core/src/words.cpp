#include "lsawb/words.hpp"

#include <algorithm>

#include "lsawb/error.hpp"

namespace lsawb {

Word parse_word(std::string_view text) {
  if (text == "-" || text == "()") return {};
  for (std::size_t t = 0; t < text.size(); ++t)
    if (text[t] != 'A' && text[t] != 'B')
      throw ParseError(std::string("words use only the letters A and B, found '") + text[t] + "'",
                       "column " + std::to_string(t + 1));
  return Word(text);
}

void WordSum::add(const Word& w, const Scalar& c) {
  if (lsawb::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (lsawb::is_zero(it->second)) terms_.erase(it);
  }
}

Scalar WordSum::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar(0) : it->second;
}

WordSum& WordSum::operator+=(const WordSum& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordSum& WordSum::operator-=(const WordSum& other) {
  for (const auto& [w, c] : other.terms_) add(w, -c);
  return *this;
}

WordSum& WordSum::operator*=(const Scalar& s) {
  if (lsawb::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }

int epsilon(const Word& x, std::size_t i) {
  if (i > x.size()) throw DomainError("insertion position out of range");
  // x[0] and x[l+1] are empty; letters sit at 1..l.
  const char left = i == 0 ? '\0' : x[i - 1];
  const char right = i == x.size() ? '\0' : x[i];
  if (left == 'A' && right == 'B') return -1;
  if (left == 'B' && (right == 'A' || right == '\0')) return 1;
  if (left == '\0' && right == 'A') return 1;
  return 0;
}

Word insert_at(const Word& x, std::size_t i, const Word& y) {
  if (i > x.size()) throw DomainError("insertion position out of range");
  return x.substr(0, i) + y + x.substr(i);
}

std::vector<std::pair<Word, Scalar>> insertion_terms(const Word& x, const Word& y) {
  std::vector<std::pair<Word, Scalar>> out;
  for (std::size_t i = 0; i <= x.size(); ++i) {
    const int e = epsilon(x, i);
    if (e == 0) continue;
    const Word w = insert_at(x, i, y);
    auto it = std::find_if(out.begin(), out.end(), [&](const auto& t) { return t.first == w; });
    if (it == out.end())
      out.emplace_back(w, Scalar(e));
    else
      it->second += e;
  }
  std::erase_if(out, [](const auto& t) { return lsawb::is_zero(t.second); });
  return out;
}

WordSum insert_product(const Word& x, const Word& y) {
  WordSum s;
  for (const auto& [w, c] : insertion_terms(x, y)) s.add(w, c);
  return s;
}

WordSum insert_product(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) {
      WordSum p = insert_product(x, y);
      p *= cx * cy;
      out += p;
    }
  return out;
}

WordSum word_associator(const WordSum& a, const WordSum& b, const WordSum& c) {
  return insert_product(insert_product(a, b), c) - insert_product(a, insert_product(b, c));
}

std::string format_word(const Word& w, bool pretty) {
  if (w.empty()) return pretty ? "∅" : "()";
  if (!pretty) return w;
  static const char* sup[] = {"⁰", "¹", "²", "³", "⁴",
                              "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (std::size_t t = 0; t < w.size();) {
    std::size_t run = 1;
    while (t + run < w.size() && w[t + run] == w[t]) ++run;
    out += w[t];
    if (run > 1)
      for (char d : std::to_string(run)) out += sup[d - '0'];
    t += run;
  }
  return out;
}

std::string format_terms(const std::vector<std::pair<Word, Scalar>>& terms, bool pretty) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& [w, c] = terms[t];
    if (t == 0)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    const Scalar mag = abs(c);
    if (mag != 1) out += to_string(mag);
    out += format_word(w, pretty);
  }
  return out;
}

std::string to_string(const WordSum& s, bool pretty) {
  std::vector<std::pair<Word, Scalar>> terms(s.terms().begin(), s.terms().end());
  return format_terms(terms, pretty);
}

std::vector<Word> words_of_length(std::size_t n) {
  std::vector<Word> out{Word()};
  for (std::size_t l = 0; l < n; ++l) {
    std::vector<Word> next;
    for (const auto& w : out) {
      next.push_back(w + 'A');
      next.push_back(w + 'B');
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace lsawb
