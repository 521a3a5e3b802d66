#include "lsawb/cohomology.hpp"

#include <cstdlib>
#include <map>
#include <string>

#include "lsawb/error.hpp"

namespace lsawb {

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::size_t tuple_index(const std::vector<std::size_t>& t, std::size_t n) {
  std::size_t idx = 0;
  for (auto x : t) idx = idx * n + x;
  return idx;
}

// Calls fn(tuple) for every tuple in {0..n-1}^len, last coordinate fastest.
template <class Fn>
void for_each_tuple(std::size_t len, std::size_t n, Fn fn) {
  std::vector<std::size_t> t(len, 0);
  while (true) {
    fn(t);
    std::size_t pos = len;
    while (pos > 0) {
      --pos;
      if (++t[pos] < n) break;
      t[pos] = 0;
      if (pos == 0) return;
    }
    if (len == 0) return;
  }
}

std::vector<std::size_t> without(const std::vector<std::size_t>& x, std::size_t drop, std::size_t end) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < end; ++t)
    if (t != drop) out.push_back(x[t]);
  return out;
}

int parity_sign(long e) { return std::labs(e) % 2 == 0 ? 1 : -1; }

void check_same_base(const Cochain& f, const Cochain& g) {
  if (f.base_dim() != g.base_dim()) throw DimensionError("cochains live on different base spaces");
}

void check_compose_bounds(const Cochain& f, const Cochain& g) {
  check_same_base(f, g);
  if (f.degree() + g.degree() == 0) throw DomainError("composition of two degree-0 cochains is undefined");
  const std::size_t out = f.degree() + g.degree() - 1;
  if (out > kMaxComposeDegree) throw DomainError("composition degree exceeds " + std::to_string(kMaxComposeDegree));
  if (ipow(f.base_dim(), out + 1) > kMaxComposeEntries)
    throw DomainError("composition result exceeds " + std::to_string(kMaxComposeEntries) + " entries");
}

}  // namespace

Cochain::Cochain(std::size_t degree, std::size_t base_dim)
    : degree_(degree), n_(base_dim), data_(ipow(base_dim, degree + 1)) {
  if (base_dim == 0) throw DomainError("cochains need a nonzero base dimension");
}

Cochain Cochain::from_algebra(const Algebra& a) {
  Cochain f(2, a.dim());
  for (const auto& e : a.entries()) f.data_[(e.i * a.dim() + e.j) * a.dim() + e.k] = e.c;
  return f;
}

Cochain Cochain::identity(std::size_t n) {
  Cochain f(1, n);
  for (std::size_t i = 0; i < n; ++i) f.data_[i * n + i] = 1;
  return f;
}

Cochain Cochain::constant(const Vector& v) {
  Cochain f(0, v.size());
  f.data_ = v;
  return f;
}

Cochain Cochain::random(std::size_t degree, std::size_t n, SampleSource& src) {
  Cochain f(degree, n);
  for (auto& x : f.data_) x = src.integer(-3, 3);
  return f;
}

std::size_t Cochain::offset(const std::vector<std::size_t>& args) const {
  if (args.size() != degree_) throw DimensionError("wrong number of cochain arguments");
  return tuple_index(args, n_) * n_;
}

Vector Cochain::value(const std::vector<std::size_t>& args) const {
  const std::size_t o = offset(args);
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(o), data_.begin() + static_cast<std::ptrdiff_t>(o + n_));
}

Vector Cochain::evaluate(const std::vector<Vector>& args) const {
  if (args.size() != degree_) throw DimensionError("wrong number of cochain arguments");
  for (const auto& v : args)
    if (v.size() != n_) throw DimensionError("cochain argument has the wrong length");
  Vector out = zero_vector(n_);
  std::vector<std::size_t> idx(degree_);
  auto rec = [&](auto&& self, std::size_t pos, const Scalar& coeff) -> void {
    if (pos == degree_) {
      const std::size_t o = tuple_index(idx, n_) * n_;
      for (std::size_t k = 0; k < n_; ++k)
        if (sgn(data_[o + k]) != 0) out[k] += coeff * data_[o + k];
      return;
    }
    for (std::size_t t = 0; t < n_; ++t) {
      if (sgn(args[pos][t]) == 0) continue;
      idx[pos] = t;
      self(self, pos + 1, coeff * args[pos][t]);
    }
  };
  rec(rec, 0, Scalar(1));
  return out;
}

bool Cochain::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

Cochain& Cochain::operator+=(const Cochain& other) {
  if (degree_ != other.degree_ || n_ != other.n_) throw DimensionError("cochain shapes differ");
  for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += other.data_[t];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& other) {
  if (degree_ != other.degree_ || n_ != other.n_) throw DimensionError("cochain shapes differ");
  for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= other.data_[t];
  return *this;
}

Cochain& Cochain::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
Cochain operator*(const Scalar& s, Cochain f) { return f *= s; }

Cochain lsa_coboundary(const Algebra& a, const Cochain& f) {
  const std::size_t n = a.dim();
  const std::size_t p = f.degree();
  if (f.base_dim() != n) throw DimensionError("cochain and algebra dimensions differ");
  if (p > kMaxLsaDegree) throw DomainError("LSA coboundary is limited to degree " + std::to_string(kMaxLsaDegree));
  Cochain out(p + 1, n);
  if (p == 0) return out;
  auto& data = out.entries();
  for_each_tuple(p + 1, n, [&](const std::vector<std::size_t>& x) {
    Vector res = zero_vector(n);
    const std::size_t last = x[p];
    for (std::size_t i = 0; i < p; ++i) {
      const Scalar sign = (i % 2 == 0) ? 1 : -1;
      // x_i . f(x_1..^x_i..x_{p+1})
      const Vector v1 = f.value(without(x, i, p + 1));
      for (std::size_t m = 0; m < n; ++m) {
        if (is_zero(v1[m])) continue;
        const Vector& prod = a.product(x[i], m);
        for (std::size_t k = 0; k < n; ++k) res[k] += sign * v1[m] * prod[k];
      }
      // f(x_1..^x_i..x_p, x_i) . x_{p+1}
      std::vector<std::size_t> y = without(x, i, p);
      y.push_back(x[i]);
      const Vector v2 = f.value(y);
      for (std::size_t m = 0; m < n; ++m) {
        if (is_zero(v2[m])) continue;
        const Vector& prod = a.product(m, last);
        for (std::size_t k = 0; k < n; ++k) res[k] += sign * v2[m] * prod[k];
      }
      // - f(x_1..^x_i..x_p, x_i . x_{p+1})
      const Vector& w = a.product(x[i], last);
      for (std::size_t t = 0; t < n; ++t) {
        if (is_zero(w[t])) continue;
        y.back() = t;
        const Vector v3 = f.value(y);
        for (std::size_t k = 0; k < n; ++k) res[k] -= sign * w[t] * v3[k];
      }
      // f([x_i, x_j], x_1..^x_i..^x_j..x_{p+1})
      for (std::size_t j = i + 1; j < p; ++j) {
        const Scalar sj = ((i + j) % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> rest{0};
        for (std::size_t t = 0; t <= p; ++t)
          if (t != i && t != j) rest.push_back(x[t]);
        const Vector br = a.product(x[i], x[j]) - a.product(x[j], x[i]);
        for (std::size_t t = 0; t < n; ++t) {
          if (is_zero(br[t])) continue;
          rest[0] = t;
          const Vector v4 = f.value(rest);
          for (std::size_t k = 0; k < n; ++k) res[k] += sj * br[t] * v4[k];
        }
      }
    }
    const std::size_t o = out.offset(x);
    for (std::size_t k = 0; k < n; ++k) data[o + k] = res[k];
  });
  return out;
}

Vector SparseMatrix::apply(const Vector& x) const {
  if (x.size() != cols) throw DimensionError("sparse matrix and vector sizes differ");
  Vector out = zero_vector(rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : data[r]) out[r] += v * x[c];
  return out;
}

Matrix SparseMatrix::dense() const {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (const auto& [c, v] : data[r]) m(r, c) += v;
  return m;
}

std::size_t rank(const SparseMatrix& m) {
  // pivot column -> row with leading entry 1 at that column
  std::map<std::size_t, std::vector<std::pair<std::size_t, Scalar>>> pivots;
  for (const auto& src : m.data) {
    std::map<std::size_t, Scalar> row;
    for (const auto& [c, v] : src)
      if (sgn(v) != 0) row[c] += v;
    for (auto it = row.begin(); it != row.end();) {
      if (sgn(it->second) == 0) {
        it = row.erase(it);
        continue;
      }
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      const std::size_t c = it->first;
      const Scalar f = it->second;
      for (const auto& [pc, pv] : p->second) {
        Scalar& slot = row[pc];
        slot -= f * pv;
      }
      it = row.lower_bound(c);
    }
    if (row.empty()) continue;
    const std::size_t lead = row.begin()->first;
    const Scalar inv = 1 / row.begin()->second;
    std::vector<std::pair<std::size_t, Scalar>> stored;
    for (const auto& [c, v] : row)
      if (sgn(v) != 0) stored.emplace_back(c, v * inv);
    pivots.emplace(lead, std::move(stored));
  }
  return pivots.size();
}

SparseMatrix lsa_coboundary_matrix(const Algebra& a, std::size_t p) {
  const std::size_t n = a.dim();
  if (p > kMaxLsaDegree) throw DomainError("LSA coboundary is limited to degree " + std::to_string(kMaxLsaDegree));
  SparseMatrix m;
  m.rows = ipow(n, p + 2);
  m.cols = ipow(n, p + 1);
  m.data.resize(m.rows);
  if (p == 0) return m;
  auto col = [n](const std::vector<std::size_t>& y, std::size_t k) { return tuple_index(y, n) * n + k; };
  for_each_tuple(p + 1, n, [&](const std::vector<std::size_t>& x) {
    std::vector<std::map<std::size_t, Scalar>> rows(n);
    const std::size_t last = x[p];
    for (std::size_t i = 0; i < p; ++i) {
      const Scalar sign = (i % 2 == 0) ? 1 : -1;
      const auto y1 = without(x, i, p + 1);
      for (std::size_t mm = 0; mm < n; ++mm) {
        const Vector& prod = a.product(x[i], mm);
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(prod[k])) rows[k][col(y1, mm)] += sign * prod[k];
      }
      std::vector<std::size_t> y = without(x, i, p);
      y.push_back(x[i]);
      for (std::size_t mm = 0; mm < n; ++mm) {
        const Vector& prod = a.product(mm, last);
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(prod[k])) rows[k][col(y, mm)] += sign * prod[k];
      }
      const Vector& w = a.product(x[i], last);
      for (std::size_t t = 0; t < n; ++t) {
        if (is_zero(w[t])) continue;
        y.back() = t;
        for (std::size_t k = 0; k < n; ++k) rows[k][col(y, k)] -= sign * w[t];
      }
      for (std::size_t j = i + 1; j < p; ++j) {
        const Scalar sj = ((i + j) % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> rest{0};
        for (std::size_t t = 0; t <= p; ++t)
          if (t != i && t != j) rest.push_back(x[t]);
        const Vector br = a.product(x[i], x[j]) - a.product(x[j], x[i]);
        for (std::size_t t = 0; t < n; ++t) {
          if (is_zero(br[t])) continue;
          rest[0] = t;
          for (std::size_t k = 0; k < n; ++k) rows[k][col(rest, k)] += sj * br[t];
        }
      }
    }
    const std::size_t base = tuple_index(x, n) * n;
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& [c, v] : rows[k])
        if (sgn(v) != 0) m.data[base + k].emplace_back(c, v);
  });
  return m;
}

CohomologyDims lsa_cohomology(const Algebra& a, std::size_t p) {
  if (p < 1 || p > kMaxLsaDegree) throw DomainError("LSA cohomology degree must lie in 1..3");
  CohomologyDims d;
  d.degree = p;
  d.dim_c = ipow(a.dim(), p + 1);
  d.dim_z = d.dim_c - rank(lsa_coboundary_matrix(a, p));
  d.dim_b = p == 1 ? 0 : rank(lsa_coboundary_matrix(a, p - 1));
  d.dim_h = d.dim_z - d.dim_b;
  return d;
}

Subspace lsa_cocycles_1(const Algebra& a) { return kernel(lsa_coboundary_matrix(a, 1).dense()); }

Cochain compose_at(const Cochain& f, const Cochain& g, std::size_t i) {
  check_compose_bounds(f, g);
  const std::size_t p = f.degree();
  const std::size_t q = g.degree();
  if (i < 1 || i > p) throw DomainError("insertion position out of range");
  const std::size_t n = f.base_dim();
  Cochain out(p + q - 1, n);
  auto& data = out.entries();
  for_each_tuple(p + q - 1, n, [&](const std::vector<std::size_t>& x) {
    const std::vector<std::size_t> inner(x.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                         x.begin() + static_cast<std::ptrdiff_t>(i - 1 + q));
    const Vector w = g.value(inner);
    std::vector<std::size_t> outer(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(i - 1));
    outer.push_back(0);
    outer.insert(outer.end(), x.begin() + static_cast<std::ptrdiff_t>(i - 1 + q), x.end());
    const std::size_t o = out.offset(x);
    for (std::size_t t = 0; t < n; ++t) {
      if (is_zero(w[t])) continue;
      outer[i - 1] = t;
      const std::size_t fo = f.offset(outer);
      for (std::size_t k = 0; k < n; ++k) data[o + k] += w[t] * f.entries()[fo + k];
    }
  });
  return out;
}

namespace {

Cochain compose_sum(const Cochain& f, const Cochain& g, bool signed_sum) {
  check_compose_bounds(f, g);
  const std::size_t p = f.degree();
  const long q = static_cast<long>(g.degree());
  Cochain out(p + g.degree() - 1, f.base_dim());
  for (std::size_t i = 1; i <= p; ++i) {
    const int s = signed_sum ? parity_sign((q - 1) * static_cast<long>(i - 1)) : 1;
    if (s > 0)
      out += compose_at(f, g, i);
    else
      out -= compose_at(f, g, i);
  }
  return out;
}

}  // namespace

Cochain compose_signed(const Cochain& f, const Cochain& g) { return compose_sum(f, g, true); }
Cochain compose_unsigned(const Cochain& f, const Cochain& g) { return compose_sum(f, g, false); }

Cochain gerstenhaber_bracket(const Cochain& f, const Cochain& g) {
  Cochain fg = compose_signed(f, g);
  const Cochain gf = compose_signed(g, f);
  if (parity_sign(f.grading() * g.grading()) > 0)
    fg -= gf;
  else
    fg += gf;
  return fg;
}

namespace {

// mu o mu = 0, evaluated pointwise so no degree-3 tensor is materialized.
bool squares_to_zero(const Cochain& mu) {
  const std::size_t n = mu.base_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vector left = mu.evaluate({mu.value({i, j}), unit_vector(n, k)});
        const Vector right = mu.evaluate({unit_vector(n, i), mu.value({j, k})});
        if (left != right) return false;
      }
  return true;
}

}  // namespace

Cochain hochschild_d(const Cochain& mu, const Cochain& f) {
  if (mu.degree() != 2) throw DomainError("the multiplication must be a degree-2 cochain");
  if (!squares_to_zero(mu)) throw DomainError("multiplication is not associative (mu o mu != 0)");
  return Scalar(-1) * gerstenhaber_bracket(mu, f);
}

}  // namespace lsawb
