#include <doctest.h>

#include "lsawb/catalog.hpp"
#include "lsawb/cohomology.hpp"
#include "lsawb/error.hpp"
#include "oracles.hpp"

using namespace lsawb;

namespace {

// f(v_1, ..., v_p) straight from the flat tensor, skipping zero coordinates.
Vector eval_oracle(const Cochain& f, const std::vector<Vector>& args) {
  const auto n = f.base_dim();
  Vector out(n);
  std::vector<std::size_t> idx(args.size());
  const auto& data = f.entries();
  std::function<void(std::size_t, Scalar, std::size_t)> rec = [&](std::size_t pos, Scalar coef, std::size_t flat) {
    if (pos == args.size()) {
      for (std::size_t k = 0; k < n; ++k) out[k] += coef * data[flat * n + k];
      return;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(args[pos][i]) != 0) rec(pos + 1, coef * args[pos][i], flat * n + i);
  };
  rec(0, 1, 0);
  return out;
}

std::vector<Vector> drop(std::vector<Vector> v, std::size_t i) {
  v.erase(v.begin() + static_cast<long>(i));
  return v;
}

// The LSA coboundary written out as its four sums, with the
// bracket slot followed by x_1, ..., x_{n+1} minus x_i and x_j.
Cochain coboundary_oracle(const Algebra& a, const Cochain& f) {
  const std::size_t n = a.dim(), p = f.degree();
  Cochain out(p + 1, n);
  std::vector<std::size_t> idx(p + 1, 0);
  auto mul = [&](const Vector& x, const Vector& y) { return oracle::mul(a, x, y); };
  for (;;) {
    std::vector<Vector> x;
    for (auto i : idx) x.push_back(unit_vector(n, i));
    Vector v(n);
    for (std::size_t i = 0; i < p; ++i) {
      const Scalar s = i % 2 == 0 ? 1 : -1;
      v = v + s * mul(x[i], eval_oracle(f, drop(x, i)));
      auto head = drop(x, i);
      head.pop_back();
      auto with_xi = head;
      with_xi.push_back(x[i]);
      v = v + s * mul(eval_oracle(f, with_xi), x[p]);
      auto with_prod = head;
      with_prod.push_back(mul(x[i], x[p]));
      v = v - s * eval_oracle(f, with_prod);
    }
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = i + 1; j < p; ++j) {
        const Scalar s = (i + j) % 2 == 0 ? 1 : -1;
        std::vector<Vector> args{mul(x[i], x[j]) - mul(x[j], x[i])};
        for (std::size_t k = 0; k <= p; ++k)
          if (k != i && k != j) args.push_back(x[k]);
        v = v + s * eval_oracle(f, args);
      }
    std::size_t flat = 0;
    for (auto i : idx) flat = flat * n + i;
    for (std::size_t k = 0; k < n; ++k) out.entries()[flat * n + k] = v[k];
    std::size_t pos = p + 1;
    while (pos > 0 && ++idx[pos - 1] == n) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

Cochain product_cochain(const Algebra& a) { return Cochain::from_algebra(a); }

std::vector<Algebra> small_associative() {
  return {catalog_algebra("dual-numbers"), strictly_upper(3), Algebra("unit-1", 1, {{0, 0, 0, 1}}),
          Algebra("diag-2", 2, {{0, 0, 0, 1}, {1, 1, 1, 1}})};
}

}  // namespace

TEST_CASE("coboundary examples") {
  const auto a = a1_lambda(rational(1, 2));
  CHECK(lsa_coboundary(a, Cochain::identity(3)) == product_cochain(a));
  CHECK(lsa_coboundary(a, Cochain(2, 3)).is_zero());
  CHECK_THROWS_AS(lsa_coboundary(a, Cochain(4, 3)), DomainError);
  CHECK_THROWS_AS(lsa_coboundary(a, Cochain(1, 2)), DimensionError);
}

TEST_CASE("coboundary agrees with the literal formula and the sparse matrix") {
  SampleSource src(101);
  for (const char* name : {"rad-not-ideal-4d", "A_2", "lsa-rsa-2d", "dim2-simple"}) {
    const auto a = catalog_algebra(name);
    for (std::size_t p = 1; p <= (a.dim() <= 3 ? 3u : 2u); ++p) {
      INFO(name << " p=" << p);
      const auto f = Cochain::random(p, a.dim(), src);
      const auto d = lsa_coboundary(a, f);
      CHECK(d == coboundary_oracle(a, f));
      const auto m = lsa_coboundary_matrix(a, p);
      Vector flat(f.entries().begin(), f.entries().end());
      CHECK(m.apply(flat) == Vector(d.entries().begin(), d.entries().end()));
      CHECK(rank(m) == oracle::bareiss_rank(m.dense()));
    }
  }
}

TEST_CASE("delta squared vanishes on catalog algebras") {
  SampleSource src(103);
  for (const auto& a : catalog_lsas()) {
    INFO(a.name());
    const std::size_t trials = a.dim() <= 3 ? 50 : 10;
    bool ok = true;
    for (std::size_t t = 0; t < trials; ++t) {
      ok = ok && lsa_coboundary(a, lsa_coboundary(a, Cochain::random(1, a.dim(), src))).is_zero();
      ok = ok && lsa_coboundary(a, lsa_coboundary(a, Cochain::random(2, a.dim(), src))).is_zero();
    }
    CHECK(ok);
  }
}

TEST_CASE("Z1 equals the derivation algebra") {
  for (const auto& a : catalog_lsas()) {
    INFO(a.name());
    const auto h1 = lsa_cohomology(a, 1);
    CHECK(h1.dim_z == oracle::derivation_dimension(a));
    CHECK(h1.dim_b == 0);
    CHECK(h1.dim_h == h1.dim_z);
    CHECK(lsa_cocycles_1(a).dim() == h1.dim_z);
  }
}

TEST_CASE("cohomology dimensions") {
  const auto z = Algebra::zero(1);
  for (std::size_t p = 1; p <= 3; ++p) {
    const auto c = lsa_cohomology(z, p);
    CHECK(c.dim_z == 1);
    CHECK(c.dim_b == 0);
    CHECK(c.dim_h == 1);
  }
  const auto d2 = lsa_cohomology(catalog_algebra("dim2-simple"), 2);
  CHECK(d2.dim_h == 0);
  CHECK(d2.dim_c == 8);

  struct Row {
    const char* name;
    std::size_t h1, h2;
  };
  for (const Row& r : std::initializer_list<Row>{{"lsa-rsa-2d", 1, 1},
                                                 {"A_1,-1", 1, 2},
                                                 {"A_1,1/2", 1, 2},
                                                 {"A_1,1", 1, 1},
                                                 {"A_2", 0, 0},
                                                 {"dim4-complete-simple", 1, 1},
                                                 {"incomplete-simple-3", 1, 1},
                                                 {"dual-numbers", 1, 2}}) {
    INFO(r.name);
    const auto a = catalog_algebra(r.name);
    CHECK(lsa_cohomology(a, 1).dim_h == r.h1);
    CHECK(lsa_cohomology(a, 2).dim_h == r.h2);
  }
  const auto ex = catalog_algebra("rad-not-ideal-4d");
  CHECK(lsa_cohomology(ex, 3).dim_h == 12);

  // rank-nullity between consecutive degrees
  for (const char* name : {"A_2", "lsa-rsa-2d"}) {
    const auto a = catalog_algebra(name);
    const auto c2 = lsa_cohomology(a, 2), c3 = lsa_cohomology(a, 3);
    CHECK(c3.dim_b == c2.dim_c - c2.dim_z);
  }
  CHECK_THROWS_AS(lsa_cohomology(ex, 4), DomainError);
}

TEST_CASE("signed composition") {
  SampleSource src(107);
  const auto f = Cochain::random(1, 3, src), g = Cochain::random(1, 3, src);
  const auto fg = compose_signed(f, g);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(fg.value({i}) == eval_oracle(f, {eval_oracle(g, {unit_vector(3, i)})}));
  CHECK(compose_unsigned(f, g) == fg);

  // mu o mu is the associator
  const auto a = catalog_algebra("lsa-rsa-2d");
  const auto mu = product_cochain(a);
  const auto mm = compose_signed(mu, mu);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        CHECK(mm.value({i, j, k}) == associator(a, unit_vector(2, i), unit_vector(2, j), unit_vector(2, k)));
  for (const auto& b : small_associative()) CHECK(compose_signed(product_cochain(b), product_cochain(b)).is_zero());

  CHECK_THROWS_AS(compose_signed(Cochain::random(3, 2, src), Cochain::random(3, 2, src)), DomainError);
  CHECK_THROWS_AS(compose_signed(Cochain::random(2, 4, src), Cochain::random(2, 4, src)), DomainError);
  CHECK_THROWS_AS(compose_signed(f, Cochain::random(1, 2, src)), DimensionError);
}

TEST_CASE("graded right-symmetry of the signed composition") {
  SampleSource src(109);
  for (const auto& degs : std::vector<std::array<std::size_t, 3>>{{2, 1, 1}, {1, 2, 1}, {2, 2, 1}, {1, 1, 2}, {2, 1, 2}}) {
    for (int t = 0; t < 5; ++t) {
      const auto f = Cochain::random(degs[0], 2, src), g = Cochain::random(degs[1], 2, src),
                 h = Cochain::random(degs[2], 2, src);
      const auto lhs = compose_signed(compose_signed(f, g), h) - compose_signed(f, compose_signed(g, h));
      const auto rhs = compose_signed(compose_signed(f, h), g) - compose_signed(f, compose_signed(h, g));
      const Scalar sign = (g.grading() * h.grading()) % 2 == 0 ? 1 : -1;
      CHECK(lhs == sign * rhs);
    }
  }
}

TEST_CASE("Gerstenhaber bracket") {
  SampleSource src(113);
  const auto f = Cochain::random(2, 2, src);
  CHECK(gerstenhaber_bracket(f, f) == Scalar(2) * compose_signed(f, f));
  const auto a = Cochain::random(1, 3, src), b = Cochain::random(1, 3, src);
  CHECK(gerstenhaber_bracket(a, b) == compose_signed(a, b) - compose_signed(b, a));

  for (int t = 0; t < 10; ++t) {
    const auto x = Cochain::random(2, 2, src), y = Cochain::random(2, 2, src), z = Cochain::random(1, 2, src);
    // graded skew-symmetry
    const Scalar sxy = (x.grading() * y.grading()) % 2 == 0 ? 1 : -1;
    CHECK(gerstenhaber_bracket(x, y) == -sxy * gerstenhaber_bracket(y, x));
    // (-1)^{|x||z|}[[x,[[y,z]]]] + (-1)^{|y||x|}[[y,[[z,x]]]] + (-1)^{|z||y|}[[z,[[x,y]]]] = 0
    auto sign = [](const Cochain& u, const Cochain& v) { return Scalar((u.grading() * v.grading()) % 2 == 0 ? 1 : -1); };
    const auto jac = sign(x, z) * gerstenhaber_bracket(x, gerstenhaber_bracket(y, z)) +
                     sign(y, x) * gerstenhaber_bracket(y, gerstenhaber_bracket(z, x)) +
                     sign(z, y) * gerstenhaber_bracket(z, gerstenhaber_bracket(x, y));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("Hochschild differential") {
  const auto m2 = catalog_algebra("matrix-units-2");
  const auto mu = product_cochain(m2);
  // d(id) = -(mu o id - id o mu) = -(2 mu - mu)
  CHECK(hochschild_d(mu, Cochain::identity(4)) == Scalar(-1) * mu);

  const Vector v{1, 2, 0, -1};
  const auto dv = hochschild_d(mu, Cochain::constant(v));
  REQUIRE(dv.degree() == 1);
  for (std::size_t i = 0; i < 4; ++i) {
    const auto x = unit_vector(4, i);
    CHECK(dv.value({i}) == multiply(m2, x, v) - multiply(m2, v, x));
  }

  SampleSource src(127);
  for (const auto& b : small_associative()) {
    const auto m = product_cochain(b);
    for (std::size_t deg = 0; deg <= 2; ++deg)
      for (int t = 0; t < (deg == 2 && b.dim() == 3 ? 2 : 20); ++t) {
        const auto f = deg == 0 ? Cochain::constant(src.vector(b.dim())) : Cochain::random(deg, b.dim(), src);
        const auto d = hochschild_d(m, f);
        CHECK(d == Scalar(-1) * gerstenhaber_bracket(m, f));
        if (d.degree() + 1 + 1 <= kMaxComposeDegree) CHECK(hochschild_d(m, d).is_zero());
      }
  }
  CHECK_THROWS_AS(hochschild_d(product_cochain(catalog_algebra("lsa-rsa-2d")), Cochain::identity(2)), DomainError);
}

TEST_CASE("unsigned composition") {
  SampleSource src(131);
  const auto f = Cochain::random(2, 2, src), g = Cochain::random(2, 2, src);
  const auto fg = compose_unsigned(f, g);
  CHECK(fg.degree() == 3);
  CHECK(fg == compose_at(f, g, 1) + compose_at(f, g, 2));
  for (int t = 0; t < 20; ++t) {
    const auto x = Cochain::random(2, 2, src), y = Cochain::random(1, 2, src), z = Cochain::random(1, 2, src);
    const auto lhs = compose_unsigned(compose_unsigned(x, y), z) - compose_unsigned(x, compose_unsigned(y, z));
    const auto rhs = compose_unsigned(compose_unsigned(x, z), y) - compose_unsigned(x, compose_unsigned(z, y));
    CHECK(lhs == rhs);
  }
}
