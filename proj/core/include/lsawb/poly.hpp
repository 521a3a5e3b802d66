#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "lsawb/matrix.hpp"
#include "lsawb/scalar.hpp"

namespace lsawb {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Scalar> ascending);
  explicit Poly(std::vector<Scalar> ascending);

  static Poly constant(const Scalar& c);
  /// c * t^k
  static Poly monomial(const Scalar& c, std::size_t k);
  /// t - r
  static Poly linear_root(const Scalar& r);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(std::size_t k) const;
  Scalar leading() const;

  Scalar operator()(const Scalar& x) const;
  Matrix operator()(const Matrix& m) const;

  Poly derivative() const;
  Poly monic() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Scalar& s);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  std::vector<Scalar> coeffs_;
  void trim();
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(Poly a, const Poly& b);
Poly operator*(const Scalar& s, Poly p);
Poly operator-(const Poly& p);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};
PolyDivision divide(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly pow(const Poly& p, std::size_t e);

/// Human readable, highest degree first, variable t.
std::string to_string(const Poly& p);

/// det(t*I - m), monic of degree rows(m) (Faddeev-LeVerrier).
Poly char_poly(const Matrix& m);

/// p / gcd(p, p'), made monic.
Poly squarefree_part(const Poly& p);

/// Number of distinct real roots (Sturm sequence).
std::size_t real_root_count(const Poly& p);

/// True iff every complex root of p is real.
bool all_roots_real(const Poly& p);

/// Rational roots of p (distinct, ascending).
std::vector<Scalar> rational_roots(const Poly& p);

/// Irreducible factorization over the rationals: p = unit * prod(factors).
/// Each factor is a primitive integer polynomial with positive leading
/// coefficient, repeated according to multiplicity, sorted by (degree,
/// coefficients).
struct Factorization {
  Scalar unit;
  std::vector<Poly> factors;
};

/// Square-free decomposition followed by Kronecker's divisor search.
/// Throws DomainError for degree > 8 or the zero polynomial.
Factorization factor_small(const Poly& p);

inline constexpr long kMaxFactorDegree = 8;

}  // namespace lsawb
