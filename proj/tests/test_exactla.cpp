#include <doctest.h>

#include "lsawb/error.hpp"
#include "lsawb/matrix.hpp"
#include "lsawb/poly.hpp"
#include "lsawb/subspace.hpp"
#include "oracles.hpp"

using namespace lsawb;

namespace {

Matrix random_matrix(SampleSource& src, std::size_t rows, std::size_t cols, long lo = -3, long hi = 3) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = src.integer(lo, hi);
  return m;
}

// Low-rank random matrices exercise the interesting pivots.
Matrix random_low_rank(SampleSource& src, std::size_t rows, std::size_t cols, std::size_t r) {
  return random_matrix(src, rows, r) * random_matrix(src, r, cols);
}

}  // namespace

TEST_CASE("scalars stay canonical") {
  CHECK(to_string(parse_scalar("4/6")) == "2/3");
  CHECK(to_string(parse_scalar("-0/5")) == "0");
  CHECK(to_string(parse_scalar("-3")) == "-3");
  CHECK(rational(4, 4) == 1);
  CHECK(rational(0, 3).get_den() == 1);
  CHECK(parse_scalar("0").get_den() == 1);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar(" 1"), ParseError);
  CHECK_THROWS_AS(parse_scalar(""), ParseError);
}

TEST_CASE("rref examples") {
  const auto id = rref(Matrix::identity(3));
  CHECK(id.reduced == Matrix::identity(3));
  CHECK(id.rank == 3);

  const auto r = rref(Matrix{{1, 2}, {2, 4}});
  CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
  CHECK(r.rank == 1);
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref agrees with fraction-free elimination on random 5x7 matrices") {
  SampleSource src(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Matrix m = trial % 2 ? random_matrix(src, 5, 7) : random_low_rank(src, 5, 7, 1 + trial % 4);
    const auto r = rref(m);
    CHECK(r.rank == oracle::bareiss_rank(m));
    CHECK(r.rank == r.pivots.size());
    CHECK(oracle::is_rref(r.reduced));
    // same row space: stacking either onto the other adds no rank
    CHECK(oracle::bareiss_rank(oracle::stack(m, r.reduced)) == r.rank);
    // idempotence
    CHECK(rref(r.reduced).reduced == r.reduced);
  }
}

TEST_CASE("kernel examples and rank-nullity") {
  CHECK(kernel(Matrix(2, 2)).is_full());
  CHECK(kernel(Matrix::identity(3)).is_zero());
  const auto k = kernel(Matrix{{1, 1}});
  REQUIRE(k.dim() == 1);
  CHECK(k.basis() == Matrix{{1, -1}});

  SampleSource src(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix m = random_low_rank(src, 4, 6, 1 + trial % 4);
    const auto ker = kernel(m);
    CHECK(rank(m) + ker.dim() == m.cols());
    for (const auto& v : ker.basis_vectors()) CHECK(is_zero(m * v));
  }
}

TEST_CASE("subspace sum and intersection") {
  const auto e1 = Subspace::span(3, {unit_vector(3, 0)});
  const auto e2 = Subspace::span(3, {unit_vector(3, 1)});
  auto ops = subspace_ops(e1, e2);
  CHECK(ops.sum.dim() == 2);
  CHECK(ops.intersection.is_zero());
  CHECK_FALSE(ops.a_in_b);

  ops = subspace_ops(e1, e1);
  CHECK(ops.sum == e1);
  CHECK(ops.intersection == e1);
  CHECK(ops.a_in_b);
  CHECK(ops.b_in_a);

  CHECK_THROWS_AS(subspace_ops(e1, Subspace::full(2)), DimensionError);

  SampleSource src(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> va, vb;
    const Vector shared = src.vector(5);
    va.push_back(shared);
    vb.push_back(shared);
    for (int i = 0; i < 1 + trial % 3; ++i) va.push_back(src.vector(5));
    for (int i = 0; i < 1 + trial % 2; ++i) vb.push_back(src.vector(5));
    const auto a = Subspace::span(5, va), b = Subspace::span(5, vb);
    const auto s = a + b, meet = intersect(a, b);
    CHECK(s.dim() + meet.dim() == a.dim() + b.dim());
    CHECK(s.dim() == oracle::bareiss_rank(oracle::stack(a.basis(), b.basis())));
    CHECK(a.contains(meet));
    CHECK(b.contains(meet));
    CHECK(s.contains(a));
  }
}

TEST_CASE("subspace equality is canonical") {
  const auto a = Subspace::span(3, {{1, 2, 3}, {0, 1, 1}});
  const auto b = Subspace::span(3, {{1, 3, 4}, {2, 5, 7}});
  CHECK(a == b);
  CHECK(a.basis() == b.basis());
}

TEST_CASE("determinant and inverse against cofactor expansion") {
  SampleSource src(23);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const Matrix m = random_matrix(src, n, n);
    CHECK(determinant(m) == oracle::cofactor_det(m));
    const auto inv = inverse(m);
    CHECK(inv.has_value() == (sgn(oracle::cofactor_det(m)) != 0));
    if (inv) CHECK(m * *inv == Matrix::identity(n));
  }
}

TEST_CASE("characteristic polynomial") {
  Matrix d(2, 2);
  d(0, 0) = 2;
  CHECK(char_poly(d) == Poly{0, -2, 1});

  Matrix j(3, 3);
  j(0, 1) = 1;
  j(1, 2) = 1;
  CHECK(char_poly(j) == Poly::monomial(1, 3));

  CHECK_THROWS_AS(char_poly(Matrix(2, 3)), DimensionError);

  SampleSource src(29);
  for (int trial = 0; trial < 25; ++trial) {
    const Matrix m = random_matrix(src, 4, 4);
    CHECK(char_poly(m) == oracle::cofactor_char_poly(m));
  }
}

TEST_CASE("Cayley-Hamilton for sizes up to 5") {
  SampleSource src(31);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      const Matrix m = random_matrix(src, n, n);
      CHECK(char_poly(m)(m).is_zero());
    }
}

TEST_CASE("real root counting") {
  CHECK(real_root_count(Poly{1, 0, 1}) == 0);
  CHECK(real_root_count(Poly{-2, 0, 1}) == 2);
  const Poly p = pow(Poly::linear_root(1), 2) * Poly::linear_root(-3);
  CHECK(real_root_count(p) == 2);
  CHECK(all_roots_real(p));
  CHECK_FALSE(all_roots_real(Poly{1, 0, 1} * Poly::linear_root(2)));
  CHECK_THROWS_AS(real_root_count(Poly()), DomainError);

  // counts add over products with disjoint constructed roots
  SampleSource src(37);
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = Poly::constant(1), b = Poly::constant(1);
    std::size_t ra = 0, rb = 0;
    for (long r = -4; r <= 4; ++r) {
      const long pick = src.integer(0, 3);
      if (pick == 1) a *= Poly::linear_root(rational(2 * r, 3)), ++ra;
      if (pick == 2) b *= Poly::linear_root(rational(2 * r + 1, 3)), ++rb;
    }
    if (src.integer(0, 1)) a *= Poly{1, 0, 1};
    CHECK(real_root_count(a) == ra);
    CHECK(real_root_count(b) == rb);
    CHECK(real_root_count(a * b) == ra + rb);
  }
}

TEST_CASE("small factorization") {
  auto f = factor_small(Poly{-1, 0, 1});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == Poly{-1, 1});
  CHECK(f.factors[1] == Poly{1, 1});

  f = factor_small(Poly{1, 0, 1});
  CHECK(f.factors.size() == 1);

  f = factor_small(Poly{-4, 0, 0, 0, 1});
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0] == Poly{-2, 0, 1});
  CHECK(f.factors[1] == Poly{2, 0, 1});

  CHECK_THROWS_AS(factor_small(Poly::monomial(1, 9)), DomainError);

  SampleSource src(41);
  for (int trial = 0; trial < 40; ++trial) {
    Poly p = Poly::constant(rational(src.integer(1, 5), src.integer(1, 4)));
    long deg = 0;
    while (deg < 7) {
      const long d = src.integer(1, 3);
      if (deg + d > 8) break;
      std::vector<Scalar> c;
      for (long i = 0; i < d; ++i) c.push_back(src.integer(-3, 3));
      c.push_back(1);
      p *= Poly(c);
      deg += d;
    }
    const auto fac = factor_small(p);
    Poly back = Poly::constant(fac.unit);
    for (const auto& q : fac.factors) {
      back *= q;
      CHECK(factor_small(q).factors.size() == 1);
    }
    CHECK(back == p);
  }
}
