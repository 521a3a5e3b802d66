#include "lsawb/simplicity.hpp"

#include <algorithm>
#include <utility>

#include "echelon.hpp"
#include "lsawb/cohomology.hpp"
#include "lsawb/error.hpp"
#include "lsawb/radicals.hpp"

namespace lsawb {

namespace {

std::vector<Matrix> operators(const Algebra& a, Side side) {
  std::vector<Matrix> ops;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (side != Side::Right) ops.push_back(left_mult(a, i));
    if (side != Side::Left) ops.push_back(right_mult(a, i));
  }
  return ops;
}

bool invariant(const std::vector<Matrix>& ops, const Subspace& s) {
  const auto basis = s.basis_vectors();
  for (const auto& op : ops)
    for (const auto& v : basis)
      if (!s.contains(op * v)) return false;
  return true;
}

std::vector<Matrix> nonzero_generators(const Algebra& a) {
  std::vector<Matrix> gens;
  for (auto& m : operators(a, Side::TwoSided))
    if (!m.is_zero()) gens.push_back(std::move(m));
  return gens;
}

std::vector<Matrix> transposed(const std::vector<Matrix>& ops) {
  std::vector<Matrix> out;
  out.reserve(ops.size());
  for (const auto& m : ops) out.push_back(m.transpose());
  return out;
}

// Distinct irreducible factors of the characteristic polynomial that can be
// found exactly: a full factorization up to degree 8, otherwise the
// square-free part when small enough, otherwise the rational roots only.
std::vector<Poly> usable_factors(const Poly& cp) {
  std::vector<Poly> out;
  auto take = [&](const Factorization& f) {
    for (const auto& p : f.factors)
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  if (cp.degree() <= kMaxFactorDegree) {
    take(factor_small(cp));
  } else {
    const Poly sf = squarefree_part(cp);
    if (sf.degree() <= kMaxFactorDegree) {
      take(factor_small(sf));
    } else {
      for (const auto& r : rational_roots(cp)) out.push_back(Poly::linear_root(r));
    }
  }
  return out;
}

Matrix combination(const std::vector<Matrix>& basis, SampleSource& src) {
  const std::size_t n = basis.front().rows();
  Matrix z(n, n);
  for (const auto& b : basis) {
    const long c = src.integer(-3, 3);
    if (c != 0) z += Scalar(c) * b;
  }
  return z;
}

std::vector<Matrix> schedule(const Algebra& a, const std::vector<Matrix>& gens, std::uint64_t seed) {
  std::vector<Matrix> out;
  for (const auto& g : gens) {
    if (out.size() == kSimplicityBudget) return out;
    out.push_back(g);
  }
  const auto basis = multiplication_algebra(a);
  SampleSource src(seed);
  const std::size_t combos = std::min<std::size_t>(32, kSimplicityBudget - out.size());
  for (std::size_t t = 0; t < combos; ++t) out.push_back(combination(basis, src));
  for (std::size_t s = 0; s < gens.size() && out.size() < kSimplicityBudget; ++s)
    for (std::size_t t = 0; t < gens.size() && out.size() < kSimplicityBudget; ++t)
      out.push_back(gens[s] * gens[t]);
  return out;
}

}  // namespace

Subspace ideal_generated(const Algebra& a, const Subspace& seed, Side side) {
  if (seed.ambient_dim() != a.dim()) throw DimensionError("seed lives in a space of the wrong dimension");
  return detail::spin(operators(a, side), seed.basis_vectors(), a.dim());
}

Subspace ideal_generated(const Algebra& a, const Vector& seed, Side side) {
  if (seed.size() != a.dim()) throw DimensionError("seed vector has the wrong length");
  return detail::spin(operators(a, side), {seed}, a.dim());
}

bool is_left_ideal(const Algebra& a, const Subspace& s) { return invariant(operators(a, Side::Left), s); }
bool is_right_ideal(const Algebra& a, const Subspace& s) { return invariant(operators(a, Side::Right), s); }
bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  return invariant(operators(a, Side::TwoSided), s);
}

std::vector<Matrix> multiplication_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const auto gens = nonzero_generators(a);
  detail::Echelon e(n * n);
  std::vector<Matrix> basis{Matrix::identity(n)};
  e.insert(basis.front().flatten());
  for (std::size_t next = 0; next < basis.size() && e.dim() < n * n; ++next) {
    for (const auto& g : gens) {
      Matrix m = g * basis[next];
      if (e.insert(m.flatten())) basis.push_back(std::move(m));
    }
  }
  return basis;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Simple:
      return "Simple";
    case Verdict::NotSimple:
      return "NotSimple";
    default:
      return "Inconclusive";
  }
}

SimplicityVerdict is_simple(const Algebra& a, std::uint64_t seed) {
  const std::size_t n = a.dim();
  SimplicityVerdict out;
  if (a.has_zero_product()) {
    out.verdict = Verdict::NotSimple;
    if (n > 1) {
      out.witness = Subspace::span(n, {unit_vector(n, 0)});
      out.note = "zero product: every subspace is an ideal";
    } else {
      out.note = "zero product on a line: no proper nonzero ideal exists, but the product is trivial";
    }
    return out;
  }

  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) probes.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) probes.push_back(unit_vector(n, i) + unit_vector(n, j));
  for (const auto& v : probes) {
    Subspace j = ideal_generated(a, v, Side::TwoSided);
    if (!j.is_zero() && !j.is_full()) {
      out.verdict = Verdict::NotSimple;
      out.witness = std::move(j);
      out.note = "ideal generated by a probe vector";
      return out;
    }
  }

  const auto gens = nonzero_generators(a);
  const auto gens_t = transposed(gens);
  const auto elems = schedule(a, gens, seed);
  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    const Matrix& z = elems[idx];
    out.elements_tried = idx + 1;
    for (const auto& p : usable_factors(char_poly(z))) {
      const Matrix pz = p(z);
      const Subspace ker = kernel(pz);
      if (ker.is_zero()) continue;
      Subspace s = detail::spin(gens, {ker.basis_vectors().front()}, n);
      if (!s.is_full()) {
        out.verdict = Verdict::NotSimple;
        out.witness = std::move(s);
        out.note = "submodule spun from a kernel vector";
        return out;
      }
      if (ker.dim() != static_cast<std::size_t>(p.degree())) continue;
      const Subspace ker_t = kernel(pz.transpose());
      Subspace st = detail::spin(gens_t, {ker_t.basis_vectors().front()}, n);
      if (!st.is_full()) {
        out.verdict = Verdict::NotSimple;
        out.witness = st.annihilator();
        out.note = "annihilator of a dual submodule";
        return out;
      }
      out.verdict = Verdict::Simple;
      out.certificate = NortonCertificate{idx, z, p, ker.dim()};
      out.note = "irreducible by the Norton criterion";
      return out;
    }
  }
  out.verdict = Verdict::Inconclusive;
  out.note = "element budget exhausted";
  return out;
}

bool verify_certificate(const Algebra& a, const NortonCertificate& cert) {
  const std::size_t n = a.dim();
  if (cert.element.rows() != n || !cert.element.square()) return false;
  if (cert.factor.degree() < 1) return false;
  detail::Echelon span(n * n);
  for (const auto& m : multiplication_algebra(a)) span.insert(m.flatten());
  if (!span.contains(cert.element.flatten())) return false;
  if (cert.factor.degree() <= kMaxFactorDegree) {
    const Factorization f = factor_small(cert.factor);
    if (f.factors.size() != 1) return false;
  } else {
    return false;
  }
  if (!divide(char_poly(cert.element), cert.factor).remainder.is_zero()) return false;
  const Matrix pz = cert.factor(cert.element);
  const Subspace ker = kernel(pz);
  if (ker.dim() != cert.kernel_dim || ker.dim() != static_cast<std::size_t>(cert.factor.degree())) return false;
  const auto gens = nonzero_generators(a);
  if (!detail::spin(gens, {ker.basis_vectors().front()}, n).is_full()) return false;
  const Subspace ker_t = kernel(pz.transpose());
  return detail::spin(transposed(gens), {ker_t.basis_vectors().front()}, n).is_full();
}

Fingerprint structural_fingerprint(const Algebra& a, const FingerprintOptions& options) {
  const ProbeOptions probe{options.seed, options.samples};
  Fingerprint f;
  f.dim = a.dim();
  const RadicalReport r = radical_tower(a, probe);
  f.complete = r.complete;
  f.dim_trace_subspace = r.trace_subspace.dim();
  f.dim_koszul = r.koszul.dim();
  f.dim_trace_form = r.trace_form.dim();
  f.dim_solvable = r.solvable.dim();
  f.dim_nil = r.nil.dim();
  const LieProperties lp = lie_properties(commutator_lie(a));
  f.lie_abelian = lp.abelian;
  f.lie_nilpotent = lp.nilpotent;
  f.lie_solvable = lp.solvable;
  f.lower_central_dims = lp.lower_central_dims;
  f.derived_dims = lp.derived_dims;
  f.center_dim = lp.center.dim();
  f.simplicity = is_simple(a, options.seed).verdict;
  f.dim_derivations = derivations(a).dim();
  for (std::size_t p = 1; p <= std::min(options.degree_cap, kMaxLsaDegree); ++p)
    f.cohomology_dims.push_back(lsa_cohomology(a, p).dim_h);
  return f;
}

}  // namespace lsawb
