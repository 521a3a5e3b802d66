#include "lsawb/witt.hpp"

#include <algorithm>
#include <numeric>

#include "lsawb/error.hpp"

namespace lsawb {

namespace {

std::size_t total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), std::size_t{0}); }

void check_shape(std::size_t n, std::size_t cap, std::size_t on, std::size_t ocap) {
  if (n != on || cap != ocap) throw DimensionError("operands have different variable counts or degree caps");
}

// Exponents with total degree in [lo, hi], graded then lexicographic.
std::vector<Exponent> exponents(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<Exponent> out;
  for (std::size_t d = lo; d <= hi; ++d) {
    Exponent e(n, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
      if (pos + 1 == n) {
        e[pos] = static_cast<std::uint8_t>(left);
        out.push_back(e);
        return;
      }
      for (std::size_t k = left + 1; k-- > 0;) {
        e[pos] = static_cast<std::uint8_t>(k);
        self(self, pos + 1, left - k);
      }
    };
    rec(rec, 0, d);
  }
  return out;
}

template <class Check>
TripleSweep sweep(std::size_t n, std::size_t cap, Check check) {
  TripleSweep s;
  const auto gens = monomial_generators(n, cap);
  for (const auto& f : gens)
    for (const auto& g : gens)
      for (const auto& h : gens) {
        const int r = check(f, g, h);
        if (r < 0) {
          ++s.skipped;
          continue;
        }
        ++s.checked;
        if (r == 0 && s.holds) {
          s.holds = false;
          s.witness = std::array<VecField, 3>{f, g, h};
        }
      }
  return s;
}

}  // namespace

TruncPoly::TruncPoly(std::size_t nvars, std::size_t cap) : n_(nvars), cap_(cap) {
  if (nvars == 0) throw DomainError("polynomials need at least one variable");
}

TruncPoly TruncPoly::monomial(std::size_t nvars, std::size_t cap, const Exponent& e, const Scalar& c) {
  TruncPoly p(nvars, cap);
  if (e.size() != nvars) throw DimensionError("exponent has the wrong length");
  if (total(e) > cap) throw DomainError("monomial exceeds the degree cap");
  p.add(e, c);
  return p;
}

void TruncPoly::add(const Exponent& e, const Scalar& c) {
  if (lsawb::is_zero(c)) return;
  if (total(e) > cap_) {
    truncated_ = true;
    return;
  }
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (lsawb::is_zero(it->second)) terms_.erase(it);
  }
}

TruncPoly TruncPoly::derivative(std::size_t i) const {
  TruncPoly d(n_, cap_);
  d.truncated_ = truncated_;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponent f = e;
    --f[i];
    d.add(f, c * e[i]);
  }
  return d;
}

TruncPoly& TruncPoly::operator+=(const TruncPoly& other) {
  check_shape(n_, cap_, other.n_, other.cap_);
  truncated_ = truncated_ || other.truncated_;
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

TruncPoly& TruncPoly::operator-=(const TruncPoly& other) {
  check_shape(n_, cap_, other.n_, other.cap_);
  truncated_ = truncated_ || other.truncated_;
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

TruncPoly& TruncPoly::operator*=(const Scalar& s) {
  if (lsawb::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  check_shape(a.n_, a.cap_, b.n_, b.cap_);
  TruncPoly p(a.n_, a.cap_);
  p.truncated_ = a.truncated_ || b.truncated_;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e(a.n_);
      for (std::size_t t = 0; t < a.n_; ++t) e[t] = static_cast<std::uint8_t>(ea[t] + eb[t]);
      p.add(e, ca * cb);
    }
  return p;
}

TruncPoly operator+(TruncPoly a, const TruncPoly& b) { return a += b; }
TruncPoly operator-(TruncPoly a, const TruncPoly& b) { return a -= b; }

std::string to_string(const TruncPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    first = false;
    const Scalar mag = abs(c);
    std::string mono;
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += p.nvars() == 1 ? "x" : "x" + std::to_string(t + 1);
      if (e[t] > 1) mono += "^" + std::to_string(e[t]);
    }
    if (mono.empty())
      out += to_string(mag);
    else
      out += (mag == 1 ? "" : to_string(mag) + "*") + mono;
  }
  return out;
}

VecField::VecField(std::size_t nvars, std::size_t cap) : coeff_(nvars, TruncPoly(nvars, cap)) {}

VecField VecField::generator(std::size_t nvars, std::size_t cap, const Exponent& e, std::size_t i, const Scalar& c) {
  if (i >= nvars) throw DimensionError("direction index out of range");
  VecField f(nvars, cap);
  f.coeff_[i] = TruncPoly::monomial(nvars, cap, e, c);
  return f;
}

bool VecField::truncated() const {
  for (const auto& p : coeff_)
    if (p.truncated()) return true;
  return false;
}

bool VecField::is_zero() const {
  for (const auto& p : coeff_)
    if (!p.is_zero()) return false;
  return true;
}

VecField& VecField::operator+=(const VecField& other) {
  if (other.coeff_.size() != coeff_.size()) throw DimensionError("vector fields in different dimensions");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += other.coeff_[i];
  return *this;
}

VecField& VecField::operator-=(const VecField& other) {
  if (other.coeff_.size() != coeff_.size()) throw DimensionError("vector fields in different dimensions");
  for (std::size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= other.coeff_[i];
  return *this;
}

VecField operator+(VecField a, const VecField& b) { return a += b; }
VecField operator-(VecField a, const VecField& b) { return a -= b; }

std::string to_string(const VecField& f) {
  std::string out;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (f.coefficient(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(f.coefficient(i)) + ")*" + (f.nvars() == 1 ? "d" : "d" + std::to_string(i + 1));
  }
  return out.empty() ? "0" : out;
}

VecField vec_product(const VecField& f, const VecField& g) {
  check_shape(f.nvars(), f.cap(), g.nvars(), g.cap());
  const std::size_t n = f.nvars();
  VecField out(n, f.cap());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (g.coefficient(j).is_zero() && !g.coefficient(j).truncated()) continue;
      out.coefficient(i) += g.coefficient(j) * f.coefficient(i).derivative(j);
    }
  return out;
}

VecField witt_associator(const VecField& f, const VecField& g, const VecField& h) {
  return vec_product(vec_product(f, g), h) - vec_product(f, vec_product(g, h));
}

VecField witt_associator_closed(const VecField& f, const VecField& g, const VecField& h) {
  check_shape(f.nvars(), f.cap(), g.nvars(), g.cap());
  check_shape(f.nvars(), f.cap(), h.nvars(), h.cap());
  const std::size_t n = f.nvars();
  VecField out(n, f.cap());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const TruncPoly second = f.coefficient(i).derivative(j).derivative(k);
        if (second.is_zero() && !second.truncated()) continue;
        out.coefficient(i) += h.coefficient(k) * g.coefficient(j) * second;
      }
  return out;
}

VecField witt_bracket(const VecField& f, const VecField& g) {
  check_shape(f.nvars(), f.cap(), g.nvars(), g.cap());
  const std::size_t n = f.nvars();
  VecField out(n, f.cap());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out.coefficient(j) += f.coefficient(i) * g.coefficient(j).derivative(i);
      out.coefficient(i) -= g.coefficient(j) * f.coefficient(i).derivative(j);
    }
  return out;
}

std::vector<VecField> monomial_generators(std::size_t nvars, std::size_t cap) {
  std::vector<VecField> out;
  for (const auto& e : exponents(nvars, 0, cap))
    for (std::size_t i = 0; i < nvars; ++i) out.push_back(VecField::generator(nvars, cap, e, i));
  return out;
}

TripleSweep check_associator_closed_form(std::size_t nvars, std::size_t cap) {
  return sweep(nvars, cap, [](const VecField& f, const VecField& g, const VecField& h) {
    const VecField a = witt_associator(f, g, h);
    const VecField b = witt_associator_closed(f, g, h);
    if (a.truncated() || b.truncated()) return -1;
    return a == b ? 1 : 0;
  });
}

TripleSweep check_witt_right_symmetry(std::size_t nvars, std::size_t cap) {
  return sweep(nvars, cap, [](const VecField& f, const VecField& g, const VecField& h) {
    const VecField a = witt_associator(f, g, h);
    const VecField b = witt_associator(f, h, g);
    if (a.truncated() || b.truncated()) return -1;
    return a == b ? 1 : 0;
  });
}

TripleSweep check_novikov_truncated(std::size_t nvars, std::size_t cap) {
  return sweep(nvars, cap, [](const VecField& f, const VecField& g, const VecField& h) {
    const VecField a = vec_product(f, vec_product(g, h));
    const VecField b = vec_product(g, vec_product(f, h));
    if (a.truncated() || b.truncated()) return -1;
    return a == b ? 1 : 0;
  });
}

TripleSweep check_witt_bracket(std::size_t nvars, std::size_t cap) {
  TripleSweep s;
  const auto gens = monomial_generators(nvars, cap);
  for (const auto& f : gens)
    for (const auto& g : gens) {
      const VecField a = vec_product(f, g) - vec_product(g, f);
      const VecField b = witt_bracket(g, f);
      if (a.truncated() || b.truncated()) {
        ++s.skipped;
        continue;
      }
      ++s.checked;
      if (!(a == b) && s.holds) {
        s.holds = false;
        s.witness = std::array<VecField, 3>{f, g, VecField(nvars, cap)};
      }
    }
  return s;
}

Algebra witt_structure_algebra(std::size_t nvars, std::size_t cap) {
  if (cap < 1) throw DomainError("the positive part needs a degree cap >= 1");
  const auto exps = exponents(nvars, 1, cap);
  std::vector<VecField> basis;
  for (const auto& e : exps)
    for (std::size_t i = 0; i < nvars; ++i) basis.push_back(VecField::generator(nvars, cap, e, i));
  auto index_of = [&](const Exponent& e, std::size_t i) {
    const auto it = std::find(exps.begin(), exps.end(), e);
    return static_cast<std::size_t>(it - exps.begin()) * nvars + i;
  };
  std::vector<StructureConstant> table;
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const VecField p = vec_product(basis[a], basis[b]);
      for (std::size_t i = 0; i < nvars; ++i)
        for (const auto& [e, c] : p.coefficient(i).terms())
          if (total(e) >= 1) table.push_back({a, b, index_of(e, i), c});
    }
  return Algebra("W" + std::to_string(nvars) + "^r/deg>" + std::to_string(cap), basis.size(), std::move(table));
}

}  // namespace lsawb
