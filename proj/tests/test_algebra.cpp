#include <doctest.h>

#include "lsawb/algebra.hpp"
#include "lsawb/catalog.hpp"
#include "lsawb/error.hpp"
#include "lsawb/lie.hpp"
#include "lsawb/witt.hpp"
#include "oracles.hpp"

using namespace lsawb;

namespace {

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i - 1); }

Matrix random_invertible(SampleSource& src, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = src.integer(-2, 2);
    if (sgn(determinant(m)) != 0) return m;
  }
}

// Adds c to both e_i e_j and e_j e_i: the commutator is unchanged.
Algebra symmetric_perturbation(const Algebra& a, std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  auto entries = a.entries();
  entries.push_back({i, j, k, c});
  if (i != j) entries.push_back({j, i, k, c});
  return Algebra(a.name() + "~", a.dim(), entries);
}

}  // namespace

TEST_CASE("multiply on catalog tables") {
  const auto simple2 = catalog_algebra("dim2-simple");
  CHECK(multiply(simple2, e(2, 1), e(2, 1)) == Vector{2, 0});
  CHECK(multiply(simple2, e(2, 1), e(2, 2)) == Vector{0, 1});
  CHECK(multiply(simple2, e(2, 2), e(2, 1)) == Vector{0, 0});
  CHECK(multiply(simple2, e(2, 2), e(2, 2)) == Vector{1, 0});
  CHECK(is_zero(multiply(simple2, zero_vector(2), Vector{3, -1})));

  const auto ex = catalog_algebra("rad-not-ideal-4d");
  CHECK(multiply(ex, e(4, 3), e(4, 4)) == e(4, 2));
  CHECK_THROWS_AS(multiply(ex, e(3, 1), e(4, 1)), DimensionError);

  SampleSource src(3);
  for (int t = 0; t < 20; ++t) {
    const auto x = src.vector(4), y = src.vector(4);
    CHECK(multiply(ex, x, y) == oracle::mul(ex, x, y));
  }
}

TEST_CASE("the 2-dimensional LSA and RSA that is not associative") {
  const auto a = catalog_algebra("lsa-rsa-2d");
  const Vector y = e(2, 2);
  CHECK(associator(a, y, y, y) == e(2, 1));
  CHECK(is_left_symmetric(a));
  CHECK(is_right_symmetric(a));
  CHECK_FALSE(is_associative(a));
  CHECK_NOTHROW(commutator_lie(a));
}

TEST_CASE("associator vanishes on associative algebras") {
  const auto m = catalog_algebra("matrix-units-2");
  CHECK(is_associative(m));
  SampleSource src(8);
  for (int t = 0; t < 10; ++t) CHECK(is_zero(associator(m, src.vector(4), src.vector(4), src.vector(4))));
}

TEST_CASE("left-symmetry of the dim-2 simple LSA by exhaustive triples") {
  const auto a = catalog_algebra("dim2-simple");
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = 1; j <= 2; ++j)
      for (std::size_t k = 1; k <= 2; ++k)
        CHECK(associator(a, e(2, i), e(2, j), e(2, k)) == associator(a, e(2, j), e(2, i), e(2, k)));
}

TEST_CASE("every catalog LSA is left-symmetric and its opposite right-symmetric") {
  for (const auto& a : catalog_lsas()) {
    INFO(a.name());
    CHECK(is_left_symmetric(a));
    CHECK(is_right_symmetric(opposite(a)));
    CHECK(check_L_is_representation(a));
  }
  CHECK(is_left_symmetric(Algebra::zero(3)));
  CHECK(is_right_symmetric(Algebra::zero(3)));
  CHECK(is_right_novikov(Algebra::zero(3)));
}

TEST_CASE("left-symmetry of A equals right-symmetry of the opposite, on random tables") {
  SampleSource src(13);
  const auto lsas = catalog_lsas();
  for (int t = 0; t < 80; ++t) {
    Algebra a;
    if (t % 2 == 0) {
      const auto& base = lsas[t / 2 % lsas.size()];
      a = transform_basis(base, random_invertible(src, base.dim()));
      CHECK(is_left_symmetric(a));
    } else {
      std::vector<StructureConstant> entries;
      for (int k = 0; k < 4; ++k)
        entries.push_back({static_cast<std::size_t>(src.integer(0, 2)), static_cast<std::size_t>(src.integer(0, 2)),
                           static_cast<std::size_t>(src.integer(0, 2)), Scalar(src.integer(-2, 2))});
      a = Algebra("random", 3, entries);
    }
    CHECK(is_left_symmetric(a) == is_right_symmetric(opposite(a)));
    if (is_left_symmetric(a) || is_right_symmetric(a)) CHECK_NOTHROW(commutator_lie(a));
  }
}

TEST_CASE("violations carry the failing triple") {
  const auto a = catalog_algebra("A_2");
  const auto t = right_symmetry_violation(a);
  REQUIRE(t.has_value());
  CHECK(associator(a, e(3, t->i + 1), e(3, t->j + 1), e(3, t->k + 1)) !=
        associator(a, e(3, t->i + 1), e(3, t->k + 1), e(3, t->j + 1)));
}

TEST_CASE("right Novikov identity on truncated Witt images") {
  CHECK(is_right_novikov(witt_structure_algebra(1, 6)));
  const auto w2 = witt_structure_algebra(2, 3);
  CHECK(is_right_symmetric(w2));
  const auto t = novikov_violation(w2);
  REQUIRE(t.has_value());
}

TEST_CASE("commutator Lie algebra") {
  const auto g = commutator_lie(catalog_algebra("rad-not-ideal-4d"));
  CHECK(g.bracket(0, 2) == e(4, 3));
  CHECK(g.bracket(1, 2) == e(4, 3));
  CHECK(g.bracket(0, 3) == Vector{0, 0, 0, -1});
  CHECK(g.bracket(1, 3) == e(4, 4));
  CHECK(is_zero(g.bracket(0, 1)));
  CHECK(is_zero(g.bracket(2, 3)));

  for (const Scalar& lambda : {Scalar(-1), rational(1, 2), Scalar(1)}) {
    const auto r3 = commutator_lie(a1_lambda(lambda));
    CHECK(r3.bracket(0, 1) == e(3, 2));
    CHECK(r3.bracket(0, 2) == Vector{0, 0, lambda});
    CHECK(is_zero(r3.bracket(1, 2)));
  }

  CHECK(lie_properties(commutator_lie(catalog_algebra("dual-numbers"))).abelian);

  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = e1
  const Algebra bad("bad", 3, {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 2, 1}});
  CHECK_THROWS_AS(commutator_lie(bad), IdentityViolation);
}

TEST_CASE("left and right multiplication operators") {
  const auto a = catalog_algebra("dim2-simple");
  const auto ops = left_right_ops(a, e(2, 1));
  CHECK(ops.left == Matrix{{2, 0}, {0, 1}});
  CHECK(ops.right == Matrix{{2, 0}, {0, 0}});
  const auto zero = left_right_ops(a, zero_vector(2));
  CHECK(zero.left.is_zero());
  CHECK(zero.right.is_zero());
  for (std::size_t n : {3, 4, 5, 7}) CHECK(right_mult(incomplete_simple(n), 0).trace() == 2);

  SampleSource src(19);
  const auto ex = catalog_algebra("rad-not-ideal-4d");
  for (int t = 0; t < 20; ++t) {
    const auto x = src.vector(4), y = src.vector(4);
    const Scalar s = src.integer(-3, 3);
    CHECK(left_mult(ex, x + y) == left_mult(ex, x) + left_mult(ex, y));
    CHECK(right_mult(ex, s * x) == s * right_mult(ex, x));
    CHECK(left_mult(ex, x) * y == multiply(ex, x, y));
    CHECK(right_mult(ex, x) * y == multiply(ex, y, x));
  }
}

TEST_CASE("Lie properties") {
  const auto h1 = lie_properties(catalog_lie("heisenberg-1"));
  CHECK(h1.nilpotent);
  CHECK(h1.nilpotency_class == 2u);
  CHECK(h1.center == Subspace::span(3, {e(3, 3)}));

  const auto ex = lie_properties(commutator_lie(catalog_algebra("rad-not-ideal-4d")));
  CHECK(ex.solvable);
  CHECK_FALSE(ex.nilpotent);

  const auto ab = lie_properties(commutator_lie(Algebra::zero(3)));
  CHECK(ab.abelian);
  CHECK(ab.nilpotency_class == 1u);
  CHECK(ab.derived_length == 1u);
  CHECK(ab.center.is_full());

  const auto fil = lie_properties(catalog_lie("filiform-6"));
  CHECK(fil.nilpotency_class == 5u);
}

TEST_CASE("L is a representation exactly when the table is left-symmetric") {
  // zero product against a nonabelian prescribed bracket
  const auto h = catalog_lie("heisenberg-1");
  CHECK_FALSE(check_L_is_representation(Algebra::zero(3), &h));
  CHECK(check_L_is_representation(catalog_algebra("dim4-complete-simple")));

  SampleSource src(43);
  for (const auto& a : catalog_lsas()) {
    const auto g = commutator_lie(a);
    for (int t = 0; t < 6; ++t) {
      const auto n = a.dim();
      const auto p = symmetric_perturbation(a, src.integer(0, n - 1), src.integer(0, n - 1), src.integer(0, n - 1),
                                            Scalar(src.integer(1, 2)));
      INFO(a.name());
      CHECK(check_L_is_representation(p, &g) == is_left_symmetric(p));
    }
  }
}
