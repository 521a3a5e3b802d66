#include "lsawb/radicals.hpp"

#include <utility>

#include "echelon.hpp"
#include "lsawb/error.hpp"
#include "lsawb/lie.hpp"
#include "lsawb/poly.hpp"
#include "lsawb/simplicity.hpp"

namespace lsawb {

namespace {

std::vector<Matrix> right_ops(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(right_mult(a, i));
  return out;
}

std::vector<Matrix> left_ops(const Algebra& a) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(left_mult(a, i));
  return out;
}

void require_lsa(const Algebra& a, const char* what) {
  if (auto t = left_symmetry_violation(a)) {
    throw DomainError(std::string(what) + " requires a left-symmetric algebra; (e_" + std::to_string(t->i + 1) +
                      ", e_" + std::to_string(t->j + 1) + ", e_" + std::to_string(t->k + 1) + ") fails");
  }
}

bool is_nilpotent_matrix(const Matrix& m) {
  return char_poly(m) == Poly::monomial(1, m.rows());
}

// span{x*y : x in U, y in V}
Subspace product_span(const Algebra& a, const Subspace& u, const Subspace& v) {
  detail::Echelon e(a.dim());
  const auto ub = u.basis_vectors();
  const auto vb = v.basis_vectors();
  for (const auto& x : ub)
    for (const auto& y : vb) e.insert(multiply(a, x, y));
  return e.subspace();
}

void require_ideal(const Algebra& a, const Subspace& i) {
  if (i.ambient_dim() != a.dim()) throw DimensionError("ideal lives in a space of the wrong dimension");
  if (!is_two_sided_ideal(a, i)) throw DomainError("subspace is not a two-sided ideal");
}

Subspace stable_under(const std::vector<Matrix>& ops, Subspace w) {
  while (true) {
    Subspace next = w;
    for (const auto& op : ops) next = intersect(next, preimage(op, w));
    if (next == w) return w;
    w = std::move(next);
  }
}

}  // namespace

std::string to_string(Certificate c) {
  return c == Certificate::Exact ? "Exact" : "HeuristicLowerBound";
}

std::vector<Vector> sample_vectors(std::size_t dim, const ProbeOptions& options) {
  SampleSource src(options.seed);
  std::vector<Vector> out;
  out.reserve(options.samples);
  for (std::size_t s = 0; s < options.samples; ++s) out.push_back(src.vector(dim));
  return out;
}

Subspace trace_subspace(const Algebra& a) {
  Matrix f(1, a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) f(0, i) = right_mult(a, i).trace();
  return kernel(f);
}

CompletenessReport is_complete(const Algebra& a, const ProbeOptions& options) {
  require_lsa(a, "completeness test");
  const std::size_t n = a.dim();
  CompletenessReport rep;
  rep.complete = true;
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix r = right_mult(a, i);
    rep.basis_traces.push_back(r.trace());
    rep.basis_right_nilpotent.push_back(is_nilpotent_matrix(r));
    if (!is_zero(rep.basis_traces.back())) rep.complete = false;
  }
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(n, i));
  for (auto& v : sample_vectors(n, options)) probes.push_back(std::move(v));
  const Matrix id = Matrix::identity(n);
  for (const auto& x : probes) {
    ++rep.unit_shift_checks;
    if (is_zero(determinant(id + right_mult(a, x)))) rep.unit_shift_invertible = false;
  }

  // A nilpotent R(e_i) has trace zero; a complete algebra is right nil and
  // every Id + R(x) is invertible.
  for (std::size_t i = 0; i < n; ++i) {
    if (rep.basis_right_nilpotent[i] && !is_zero(rep.basis_traces[i]))
      throw InternalInconsistency("R(e_" + std::to_string(i + 1) + ") is nilpotent with nonzero trace");
    if (rep.complete && !rep.basis_right_nilpotent[i])
      throw InternalInconsistency("tr R vanishes but R(e_" + std::to_string(i + 1) + ") is not nilpotent");
  }
  if (rep.complete && !rep.unit_shift_invertible)
    throw InternalInconsistency("tr R vanishes but some Id + R(x) is singular");
  return rep;
}

Subspace largest_left_ideal_in(const Algebra& a, const Subspace& w) {
  if (w.ambient_dim() != a.dim()) throw DimensionError("subspace lives in a space of the wrong dimension");
  return stable_under(left_ops(a), w);
}

Subspace largest_ideal_in(const Algebra& a, const Subspace& w) {
  if (w.ambient_dim() != a.dim()) throw DimensionError("subspace lives in a space of the wrong dimension");
  auto ops = left_ops(a);
  for (auto& r : right_ops(a)) ops.push_back(std::move(r));
  return stable_under(ops, w);
}

KoszulRadical koszul_radical(const Algebra& a) {
  KoszulRadical k;
  k.radical = largest_left_ideal_in(a, trace_subspace(a));
  k.right_ideal = is_right_ideal(a, k.radical);
  k.two_sided = k.right_ideal && is_left_ideal(a, k.radical);
  return k;
}

Matrix trace_form_gram(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto r = right_ops(a);
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = (r[i] * r[j]).trace();
      g(j, i) = g(i, j);
    }
  return g;
}

Subspace trace_form_radical(const Algebra& a) { return kernel(trace_form_gram(a)); }

bool is_solvable_ideal(const Algebra& a, const Subspace& i) {
  require_ideal(a, i);
  Subspace cur = i;
  while (!cur.is_zero()) {
    Subspace next = product_span(a, cur, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return true;
}

bool is_left_nilpotent_ideal(const Algebra& a, const Subspace& i) {
  require_ideal(a, i);
  Subspace cur = i;
  for (std::size_t step = 0; step <= a.dim() + 1; ++step) {
    if (cur.is_zero()) return true;
    Subspace next = product_span(a, i, cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
  return cur.is_zero();
}

Vector Quotient::project(const Vector& x) const {
  const Vector r = ideal.reduce(x);
  Vector y(complement.size());
  for (std::size_t t = 0; t < complement.size(); ++t) y[t] = r[complement[t]];
  return y;
}

Vector Quotient::lift(const Vector& y) const {
  Vector x = zero_vector(ideal.ambient_dim());
  for (std::size_t t = 0; t < complement.size(); ++t) x[complement[t]] = y[t];
  return x;
}

Quotient quotient_algebra(const Algebra& a, const Subspace& ideal) {
  require_ideal(a, ideal);
  if (ideal.is_full()) throw DomainError("quotient by the whole algebra is zero-dimensional");
  Quotient q{Algebra{}, {}, ideal};
  std::vector<bool> pivot(a.dim(), false);
  for (auto p : ideal.pivots()) pivot[p] = true;
  for (std::size_t c = 0; c < a.dim(); ++c)
    if (!pivot[c]) q.complement.push_back(c);
  const std::size_t m = q.complement.size();
  std::vector<StructureConstant> table;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      const Vector y = q.project(a.product(q.complement[s], q.complement[t]));
      for (std::size_t k = 0; k < m; ++k)
        if (!is_zero(y[k])) table.push_back({s, t, k, y[k]});
    }
  q.algebra = Algebra(a.name() + "/I", m, std::move(table));
  return q;
}

namespace {

std::vector<Vector> probe_set(std::size_t m, const ProbeOptions& options) {
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < m; ++i) probes.push_back(unit_vector(m, i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) probes.push_back(unit_vector(m, i) + unit_vector(m, j));
  for (auto& v : sample_vectors(m, options)) probes.push_back(std::move(v));
  return probes;
}

// Greedy probe saturation: S grows by ideals generated by probe vectors of
// A/S whenever the enlarged ideal still satisfies `good` (tested in A).
template <class Pred>
Subspace saturate(const Algebra& a, const ProbeOptions& options, Pred good) {
  const std::size_t n = a.dim();
  Subspace s(n);
  bool grew = true;
  while (grew && !s.is_full()) {
    grew = false;
    std::vector<Vector> lifted;
    if (s.is_zero()) {
      lifted = probe_set(n, options);
    } else {
      const Quotient q = quotient_algebra(a, s);
      for (const auto& v : probe_set(q.complement.size(), options)) lifted.push_back(q.lift(v));
    }
    for (const auto& v : lifted) {
      if (s.contains(v)) continue;
      Subspace cand = s + ideal_generated(a, v, Side::TwoSided);
      if (good(cand)) {
        s = std::move(cand);
        grew = true;
        if (s.is_full()) break;
      }
    }
  }
  return s;
}

bool quotient_is_trivial_product(const Algebra& a, const Subspace& s) {
  return s.is_full() || quotient_algebra(a, s).algebra.has_zero_product();
}

}  // namespace

RadicalResult solvable_radical(const Algebra& a, const ProbeOptions& options) {
  RadicalResult r;
  r.space = saturate(a, options, [&](const Subspace& c) { return is_solvable_ideal(a, c); });
  if (r.space.is_full()) {
    r.status = Certificate::Exact;
    r.reason = "the whole algebra is solvable";
  } else if (quotient_is_trivial_product(a, r.space)) {
    r.status = Certificate::Exact;
    r.reason = "quotient has zero product";
  } else {
    const Quotient q = quotient_algebra(a, r.space);
    if (is_simple(q.algebra, options.seed).verdict == Verdict::Simple) {
      r.status = Certificate::Exact;
      r.reason = "quotient is simple with nonzero product";
    } else {
      r.reason = "probe saturation";
    }
  }
  return r;
}

RadicalResult nil_radical(const Algebra& a, const ProbeOptions& options) {
  RadicalResult r;
  const bool lsa = is_left_symmetric(a);
  if (lsa && lie_properties(commutator_lie(a)).nilpotent) {
    r.space = koszul_radical(a).radical;
    r.status = Certificate::Exact;
    r.reason = "commutator Lie algebra is nilpotent, so nil(A) = rad(A)";
    return r;
  }
  r.space = saturate(a, options, [&](const Subspace& c) { return is_left_nilpotent_ideal(a, c); });
  if (r.space.is_full()) {
    r.status = Certificate::Exact;
    r.reason = "the whole algebra is left-nilpotent";
  } else if (lsa && r.space == largest_ideal_in(a, koszul_radical(a).radical)) {
    r.status = Certificate::Exact;
    r.reason = "equals the largest ideal inside rad(A)";
  } else {
    r.reason = "probe saturation";
  }
  return r;
}

NilSetProbe nil_set_probe(const Algebra& a, const ProbeOptions& options) {
  const std::size_t n = a.dim();
  NilSetProbe p;
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(n, i));
  for (auto& v : sample_vectors(n, options)) probes.push_back(std::move(v));
  detail::Echelon e(n);
  for (auto& v : probes) {
    if (is_nilpotent_matrix(right_mult(a, v))) {
      e.insert(v);
      p.members.push_back(std::move(v));
    } else {
      p.non_members.push_back(std::move(v));
    }
  }
  p.member_span = e.subspace();
  p.exact = is_left_symmetric(a) && lie_properties(commutator_lie(a)).nilpotent;
  return p;
}

RadicalReport radical_tower(const Algebra& a, const ProbeOptions& options) {
  require_lsa(a, "radical tower");
  RadicalReport r;
  r.trace_subspace = trace_subspace(a);
  const KoszulRadical k = koszul_radical(a);
  r.koszul = k.radical;
  r.koszul_right_ideal = k.right_ideal;
  r.koszul_two_sided = k.two_sided;
  r.trace_form = trace_form_radical(a);
  const RadicalResult sol = solvable_radical(a, options);
  r.solvable = sol.space;
  r.solvable_status = sol.status;
  const RadicalResult nil = nil_radical(a, options);
  r.nil = nil.space;
  r.nil_status = nil.status;
  r.s_probe_members = nil_set_probe(a, options).members;
  r.complete = is_complete(a, options).complete;
  r.inclusions_hold = r.koszul.contains(r.nil) && r.trace_form.contains(r.koszul) &&
                      r.trace_subspace.contains(r.trace_form);
  return r;
}

ClanReport clan_check(const Algebra& a, const ProbeOptions& options) {
  require_lsa(a, "clan check");
  const std::size_t n = a.dim();
  std::vector<Scalar> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = left_mult(a, i).trace();
  auto s_of = [&](const Vector& x) { return dot(s, x); };

  ClanReport c;
  Matrix form(n, n);
  c.form_symmetric = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      form(i, j) = s_of(a.product(i, j));
      if (s_of(a.product(i, j)) != s_of(a.product(j, i))) c.form_symmetric = false;
    }

  c.form_positive = c.form_symmetric;
  for (std::size_t k = 1; k <= n && c.form_positive; ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = form(i, j);
    if (sgn(determinant(minor)) <= 0) c.form_positive = false;
  }

  c.eigen_real_probe = true;
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(n, i));
  for (auto& v : sample_vectors(n, options)) probes.push_back(std::move(v));
  for (const auto& x : probes)
    if (!all_roots_real(char_poly(left_mult(a, x)))) {
      c.eigen_real_probe = false;
      break;
    }

  // e*e_i = e_i and e_i*e = e_i: L(e) = R(e) = Id, linear in e.
  Matrix sys(2 * n * n, n);
  Vector rhs(2 * n * n);
  for (std::size_t t = 0; t < n; ++t) {
    const Matrix l = left_mult(a, t);
    const Matrix r = right_mult(a, t);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        sys(p * n + q, t) = l(p, q);
        sys(n * n + p * n + q, t) = r(p, q);
      }
  }
  for (std::size_t p = 0; p < n; ++p) {
    rhs[p * n + p] = 1;
    rhs[n * n + p * n + p] = 1;
  }
  c.unit = solve(sys, rhs);
  return c;
}

Algebra helmstetter_extension(const Algebra& a) {
  const std::size_t n = a.dim();
  const std::size_t nn = n * n;
  auto E = [n](std::size_t p, std::size_t q) { return p * n + q; };
  std::vector<StructureConstant> t;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t s = 0; s < n; ++s) t.push_back({E(p, q), E(q, s), E(p, s), 1});
      t.push_back({E(p, q), nn + q, nn + p, 1});
    }
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix l = left_mult(a, i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        // [L(e_i), E_rs] = sum_x L(x, r) E_xs - sum_y L(s, y) E_ry
        for (std::size_t x = 0; x < n; ++x)
          if (!is_zero(l(x, r))) t.push_back({nn + i, E(r, s), E(x, s), l(x, r)});
        for (std::size_t y = 0; y < n; ++y)
          if (!is_zero(l(s, y))) t.push_back({nn + i, E(r, s), E(r, y), -l(s, y)});
        if (s == i) t.push_back({nn + i, E(r, s), nn + r, 1});
      }
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& v = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(v[k])) t.push_back({nn + i, nn + j, nn + k, v[k]});
    }
  }
  return Algebra("B(" + a.name() + ")", nn + n, std::move(t));
}

}  // namespace lsawb
