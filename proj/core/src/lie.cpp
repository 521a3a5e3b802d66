#include "lsawb/lie.hpp"

#include "lsawb/error.hpp"

namespace lsawb {
namespace {

std::string triple_text(std::size_t i, std::size_t j, std::size_t k) {
  return "(e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1) + ", e" + std::to_string(k + 1) + ")";
}

Algebra commutator_table(const Algebra& a) {
  std::vector<StructureConstant> e;
  for (const auto& s : a.entries()) {
    e.push_back(s);
    e.push_back({s.j, s.i, s.k, -s.c});
  }
  return Algebra(a.name(), a.dim(), std::move(e));
}

}  // namespace

std::optional<Triple> jacobi_violation(const Algebra& b) {
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
        const Vector sum = multiply(b, b.product(i, j), ek) + multiply(b, b.product(j, k), ei) +
                           multiply(b, b.product(k, i), ej);
        if (!is_zero(sum)) return Triple{i, j, k};
      }
  return std::nullopt;
}

LieAlgebra::LieAlgebra(std::string name, std::size_t dim, std::vector<StructureConstant> brackets)
    : table_(std::move(name), dim, std::move(brackets)) {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      if (table_.product(i, j) != Scalar(-1) * table_.product(j, i)) {
        throw IdentityViolation("bracket is not antisymmetric at [e" + std::to_string(i + 1) + ", e" +
                                    std::to_string(j + 1) + "]",
                                i, j, j);
      }
    }
  if (auto t = jacobi_violation(table_)) {
    throw IdentityViolation("Jacobi identity fails on " + triple_text(t->i, t->j, t->k), t->i, t->j, t->k);
  }
}

LieAlgebra commutator_lie(const Algebra& a) {
  const Algebra table = commutator_table(a);
  if (auto t = jacobi_violation(table)) {
    throw IdentityViolation("commutator is not Lie-admissible: Jacobi fails on " + triple_text(t->i, t->j, t->k),
                            t->i, t->j, t->k);
  }
  return LieAlgebra(a.name(), a.dim(), table.entries());
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vector> out;
  const auto ub = u.basis_vectors();
  const auto vb = v.basis_vectors();
  for (const auto& x : ub)
    for (const auto& y : vb) out.push_back(g.bracket(x, y));
  return Subspace::span(g.dim(), out);
}

LieProperties lie_properties(const LieAlgebra& g) {
  LieProperties p;
  const std::size_t n = g.dim();
  const Subspace full = Subspace::full(n);

  Subspace term = full;
  p.lower_central_dims.push_back(term.dim());
  while (!term.is_zero()) {
    Subspace next = bracket_span(g, full, term);
    if (next == term) break;
    term = std::move(next);
    p.lower_central_dims.push_back(term.dim());
  }
  p.nilpotent = term.is_zero();
  if (p.nilpotent) p.nilpotency_class = p.lower_central_dims.size() - 1;

  term = full;
  p.derived_dims.push_back(term.dim());
  while (!term.is_zero()) {
    Subspace next = bracket_span(g, term, term);
    if (next == term) break;
    term = std::move(next);
    p.derived_dims.push_back(term.dim());
  }
  p.solvable = term.is_zero();
  if (p.solvable) p.derived_length = p.derived_dims.size() - 1;

  p.abelian = g.table().has_zero_product();
  Matrix stacked(0, n);
  for (std::size_t i = 0; i < n; ++i) stacked = vstack(stacked, g.ad(i));
  p.center = kernel(stacked);
  return p;
}

Subspace lie_derivations(const LieAlgebra& g) { return derivations(g.table()); }

bool check_L_is_representation(const Algebra& a, const LieAlgebra* bracket) {
  const std::size_t n = a.dim();
  const Algebra table = bracket ? bracket->table() : commutator_table(a);
  if (table.dim() != n) throw DimensionError("bracket and algebra dimensions differ");
  std::vector<Matrix> L;
  for (std::size_t i = 0; i < n; ++i) L.push_back(left_mult(a, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& br = table.product(i, j);
      if (left_mult(a, br) != commutator(L[i], L[j])) return false;
      if (br != a.product(i, j) - a.product(j, i)) return false;
    }
  }
  return true;
}

}  // namespace lsawb
