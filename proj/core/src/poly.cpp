#include "lsawb/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lsawb/error.hpp"

namespace lsawb {

Poly::Poly(std::initializer_list<Scalar> ascending) : coeffs_(ascending) { trim(); }
Poly::Poly(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, std::size_t k) {
  std::vector<Scalar> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Scalar& r) { return Poly{-r, 1}; }

void Poly::trim() {
  while (!coeffs_.empty() && lsawb::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Scalar Poly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

Scalar Poly::leading() const { return coeffs_.empty() ? Scalar(0) : coeffs_.back(); }

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Poly::operator()(const Matrix& m) const {
  if (!m.square()) throw DimensionError("polynomial evaluated at a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + (*it) * id;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  const Scalar inv = 1 / leading();
  return inv * *this;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> r(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (lsawb::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator*(Poly a, const Poly& b) { return a *= b; }
Poly operator*(const Scalar& s, Poly p) { return p *= s; }
Poly operator-(const Poly& p) { return Scalar(-1) * p; }

PolyDivision divide(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (rem.size() < bc.size()) return {Poly{}, a};
  std::vector<Scalar> quot(rem.size() - db);
  const Scalar inv_lead = 1 / bc.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (is_zero(rem[k])) continue;
    const Scalar q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divide(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly pow(const Poly& p, std::size_t e) {
  Poly r = Poly::constant(1);
  for (std::size_t i = 0; i < e; ++i) r *= p;
  return r;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (is_zero(c[k])) continue;
    Scalar mag = abs(c[k]);
    if (first) {
      if (sgn(c[k]) < 0) os << "-";
    } else {
      os << (sgn(c[k]) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << to_string(mag);
      continue;
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << "t";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Poly char_poly(const Matrix& m) {
  if (!m.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = 1;
  Matrix acc = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix am = m * acc;
    c[n - k] = -am.trace() / Scalar(static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
    acc = std::move(am);
  }
  return Poly(std::move(c));
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  return divide(p, gcd(p, p.derivative())).quotient.monic();
}

namespace {

int sign_at_pos_inf(const Poly& p) { return sgn(p.leading()); }
int sign_at_neg_inf(const Poly& p) {
  const int s = sgn(p.leading());
  return (p.degree() % 2 == 0) ? s : -s;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t v = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace

std::size_t real_root_count(const Poly& p) {
  if (p.is_zero()) throw DomainError("real root count of the zero polynomial");
  const Poly q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  std::vector<Poly> seq{q, q.derivative()};
  while (!seq.back().is_zero()) {
    Poly r = divide(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  std::vector<int> neg, pos;
  for (const auto& s : seq) {
    neg.push_back(sign_at_neg_inf(s));
    pos.push_back(sign_at_pos_inf(s));
  }
  return variations(neg) - variations(pos);
}

bool all_roots_real(const Poly& p) {
  if (p.is_zero()) throw DomainError("all_roots_real of the zero polynomial");
  const Poly q = squarefree_part(p);
  return static_cast<long>(real_root_count(q)) == q.degree();
}

namespace {

/// Primitive integer polynomial with positive leading coefficient, together
/// with the rational unit u such that p = u * result.
struct Primitive {
  Scalar unit;
  std::vector<Integer> coeffs;
};

Primitive make_primitive(const Poly& p) {
  Integer den = 1;
  for (const auto& c : p.coefficients()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> z;
  for (const auto& c : p.coefficients()) z.push_back(Integer(c.get_num() * (den / c.get_den())));
  Integer content = 0;
  for (const auto& x : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (sgn(z.back()) < 0) content = -content;
  for (auto& x : z) x /= content;
  Scalar unit(content, den);
  unit.canonicalize();
  return {unit, std::move(z)};
}

Poly to_poly(const std::vector<Integer>& z) {
  std::vector<Scalar> c;
  for (const auto& x : z) c.emplace_back(x);
  return Poly(std::move(c));
}

Poly primitive_poly(const Poly& p) { return to_poly(make_primitive(p).coeffs); }

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  if (n == 0) return {};
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

/// Newton interpolation through (xs[i], ys[i]); returns ascending coefficients.
Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  const std::size_t n = xs.size();
  std::vector<Scalar> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  Poly result;
  Poly basis = Poly::constant(1);
  for (std::size_t j = 0; j < n; ++j) {
    result += dd[j] * basis;
    basis *= Poly::linear_root(xs[j]);
  }
  return result;
}

bool integral(const Poly& p) {
  return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                     [](const Scalar& c) { return c.get_den() == 1; });
}

std::optional<Poly> find_factor_of_degree(const Poly& q, long s) {
  // q is primitive, square-free, with no rational roots, degree >= 2s.
  std::vector<std::pair<std::size_t, long>> candidates;  // (divisor count, point)
  for (long a = -12; a <= 12; ++a) {
    const Scalar v = q(Scalar(a));
    candidates.emplace_back(positive_divisors(v.get_num()).size(), a);
  }
  std::stable_sort(candidates.begin(), candidates.end());
  std::vector<Scalar> xs;
  std::vector<std::vector<Integer>> divs;
  for (long i = 0; i <= s; ++i) {
    const long a = candidates[static_cast<std::size_t>(i)].second;
    xs.emplace_back(a);
    divs.push_back(positive_divisors(q(Scalar(a)).get_num()));
  }
  const Integer lead = q.leading().get_num();
  std::vector<std::size_t> idx(xs.size(), 0);
  std::vector<int> sign(xs.size(), 1);
  std::vector<Scalar> ys(xs.size());
  // Odometer over (divisor, sign) choices; the first value is kept positive
  // since g and -g are the same factor up to a unit.
  while (true) {
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = Scalar(divs[i][idx[i]] * sign[i]);
    Poly g = interpolate(xs, ys);
    if (g.degree() == s && integral(g) && lead % g.leading().get_num() == 0) {
      PolyDivision d = divide(q, g);
      if (d.remainder.is_zero() && integral(d.quotient)) return primitive_poly(g);
    }
    std::size_t pos = 0;
    while (pos < xs.size()) {
      if (pos > 0 && sign[pos] == 1) {
        sign[pos] = -1;
        break;
      }
      sign[pos] = 1;
      if (++idx[pos] < divs[pos].size()) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == xs.size()) return std::nullopt;
  }
}

void split_squarefree(const Poly& q, std::vector<Poly>& out) {
  if (q.degree() <= 0) return;
  if (q.degree() == 1) {
    out.push_back(primitive_poly(q));
    return;
  }
  for (const auto& r : rational_roots(q)) {
    const Poly lin = primitive_poly(Poly::linear_root(r));
    out.push_back(lin);
    split_squarefree(primitive_poly(divide(q, lin).quotient), out);
    return;
  }
  for (long s = 2; 2 * s <= q.degree(); ++s) {
    if (auto g = find_factor_of_degree(q, s)) {
      split_squarefree(*g, out);
      split_squarefree(primitive_poly(divide(q, *g).quotient), out);
      return;
    }
  }
  out.push_back(primitive_poly(q));
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t k = x.size(); k-- > 0;) {
    if (x[k] != y[k]) return x[k] < y[k];
  }
  return false;
}

}  // namespace

std::vector<Scalar> rational_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("rational roots of the zero polynomial");
  std::vector<Scalar> roots;
  Poly q = p;
  if (is_zero(q.coefficient(0)) && q.degree() > 0) {
    roots.emplace_back(0);
    std::size_t k = 0;
    while (is_zero(q.coefficient(k))) ++k;
    q = Poly(std::vector<Scalar>(q.coefficients().begin() + static_cast<std::ptrdiff_t>(k), q.coefficients().end()));
  }
  if (q.degree() >= 1) {
    const Primitive pr = make_primitive(q);
    const auto num_divs = positive_divisors(pr.coeffs.front());
    const auto den_divs = positive_divisors(pr.coeffs.back());
    const Poly z = to_poly(pr.coeffs);
    for (const auto& a : num_divs) {
      for (const auto& b : den_divs) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (g != 1) continue;
        for (int s : {1, -1}) {
          Scalar r(a * s, b);
          if (is_zero(z(r))) roots.push_back(r);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

Factorization factor_small(const Poly& p) {
  if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
  if (p.degree() > kMaxFactorDegree) {
    throw DomainError("factor_small supports degree <= 8, got " + std::to_string(p.degree()));
  }
  Factorization out;
  out.unit = make_primitive(p).unit;
  if (p.degree() == 0) return out;
  // Yun's square-free decomposition: p ~ prod a_i^i.
  Poly a = p.monic();
  Poly b = a.derivative();
  Poly c = gcd(a, b);
  Poly w = divide(a, c).quotient;
  Poly y = divide(b, c).quotient;
  Poly z = y - w.derivative();
  std::size_t mult = 1;
  while (w.degree() > 0) {
    Poly g = gcd(w, z);
    std::vector<Poly> parts;
    split_squarefree(primitive_poly(g), parts);
    for (const auto& f : parts)
      for (std::size_t k = 0; k < mult; ++k) out.factors.push_back(f);
    w = divide(w, g).quotient;
    y = divide(z, g).quotient;
    z = y - w.derivative();
    ++mult;
  }
  std::sort(out.factors.begin(), out.factors.end(), poly_less);
  // Fix the unit so that unit * prod(factors) reproduces p exactly.
  Poly prod = Poly::constant(1);
  for (const auto& f : out.factors) prod *= f;
  out.unit = p.leading() / prod.leading();
  return out;
}

}  // namespace lsawb
