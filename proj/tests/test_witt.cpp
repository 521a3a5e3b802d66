#include <doctest.h>

#include "lsawb/error.hpp"
#include "lsawb/witt.hpp"
#include "oracles.hpp"

using namespace lsawb;

namespace {

VecField g1(std::size_t cap, std::uint8_t a, const Scalar& c = 1) { return VecField::generator(1, cap, {a}, 0, c); }

// One-variable fields as dense coefficient lists: u d o v d = v u' d.
std::vector<Scalar> dense_product(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  std::vector<Scalar> du(u.size() > 1 ? u.size() - 1 : 1, 0);
  for (std::size_t k = 1; k < u.size(); ++k) du[k - 1] = Scalar(static_cast<long>(k)) * u[k];
  std::vector<Scalar> out(du.size() + v.size(), 0);
  for (std::size_t i = 0; i < du.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i + j] += du[i] * v[j];
  return out;
}

VecField from_dense(const std::vector<Scalar>& c, std::size_t cap) {
  VecField f(1, cap);
  for (std::size_t k = 0; k < c.size(); ++k)
    if (sgn(c[k]) != 0) f.coefficient(0).add({static_cast<std::uint8_t>(k)}, c[k]);
  return f;
}

}  // namespace

TEST_CASE("vector field products") {
  CHECK(vec_product(g1(6, 2), g1(6, 1)) == g1(6, 2, 2));
  CHECK(vec_product(g1(6, 0), g1(6, 3)).is_zero());
  const auto c = VecField::generator(2, 4, {0, 0}, 1, 5);
  const auto u = VecField::generator(2, 4, {1, 1}, 0);
  // (x1 x2 d1) o (5 d2) = 5 x1 d1
  CHECK(vec_product(u, c) == VecField::generator(2, 4, {1, 0}, 0, 5));
  CHECK(vec_product(VecField::generator(2, 4, {1, 0}, 0), VecField::generator(2, 4, {0, 1}, 1)).is_zero());
  CHECK_THROWS_AS(vec_product(g1(6, 1), g1(5, 1)), DimensionError);
  CHECK_THROWS_AS(VecField::generator(1, 3, {4}, 0), DomainError);
}

TEST_CASE("products agree with dense one-variable arithmetic") {
  SampleSource src(19);
  for (int t = 0; t < 40; ++t) {
    std::vector<Scalar> u(4), v(3);
    for (auto& x : u) x = src.integer(-3, 3);
    for (auto& x : v) x = src.integer(-3, 3);
    const auto p = vec_product(from_dense(u, 6), from_dense(v, 6));
    CHECK_FALSE(p.truncated());
    CHECK(p == from_dense(dense_product(u, v), 6));
  }
}

TEST_CASE("truncation is flagged") {
  const auto p = vec_product(g1(4, 3), g1(4, 3));  // 3 x^5 exceeds the cap
  CHECK(p.truncated());
  CHECK(p.is_zero());
  CHECK_FALSE(vec_product(g1(6, 3), g1(6, 3)).truncated());
  const auto a = TruncPoly::monomial(1, 3, {2}), b = TruncPoly::monomial(1, 3, {2});
  CHECK((a * b).truncated());
  CHECK_FALSE((a + b).truncated());
}

TEST_CASE("associator closed form") {
  const auto u = g1(6, 2), v = g1(6, 1), w = g1(6, 1);
  CHECK(witt_associator(u, v, w) == g1(6, 2, 2));
  CHECK(witt_associator_closed(u, v, w) == g1(6, 2, 2));
  CHECK(witt_associator(g1(6, 0), v, w).is_zero());
  CHECK(witt_associator(u, v, g1(6, 3)) == witt_associator(u, g1(6, 3), v));
  for (const auto& [n, d] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 6}, {2, 4}, {3, 3}}) {
    INFO(n << "," << d);
    const auto closed = check_associator_closed_form(n, d);
    CHECK(closed.holds);
    CHECK(closed.checked > 0);
    const auto rs = check_witt_right_symmetry(n, d);
    CHECK(rs.holds);
    CHECK(rs.checked > 0);
    CHECK(check_witt_bracket(n, d).holds);
  }
}

TEST_CASE("Novikov identity") {
  const auto one = check_novikov_truncated(1, 6);
  CHECK(one.holds);
  CHECK(one.checked > 0);
  const auto two = check_novikov_truncated(2, 4);
  CHECK_FALSE(two.holds);
  REQUIRE(two.witness.has_value());
  const auto& [f, g, h] = *two.witness;
  CHECK(vec_product(f, vec_product(g, h)) != vec_product(g, vec_product(f, h)));
  CHECK(check_novikov_truncated(1, 0).holds);
}

TEST_CASE("Witt structure algebras") {
  const auto w1 = witt_structure_algebra(1, 5);
  CHECK(w1.dim() == 5);
  CHECK(is_right_symmetric(w1));
  CHECK(is_right_novikov(w1));
  CHECK_FALSE(is_associative(w1));

  const auto w2 = witt_structure_algebra(2, 3);
  CHECK(w2.dim() == 18);
  CHECK(is_right_symmetric(w2));
  CHECK_FALSE(is_right_novikov(w2));
  CHECK(is_left_symmetric(opposite(w2)));
  CHECK_THROWS_AS(witt_structure_algebra(1, 0), DomainError);
}

TEST_CASE("formatting") {
  CHECK(to_string(TruncPoly::monomial(1, 4, {2}, 3)) == "3*x^2");
  CHECK(to_string(TruncPoly::monomial(2, 4, {2, 1})) == "x1^2*x2");
  CHECK(to_string(TruncPoly(1, 3)) == "0");
}
