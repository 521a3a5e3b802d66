#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lsawb/algebra.hpp"

namespace lsawb {

using Exponent = std::vector<std::uint8_t>;

/// Polynomial in n variables keeping only monomials of total degree <= D.
/// Products that would produce higher degrees drop them and set the
/// truncation flag, which then propagates through later arithmetic.
class TruncPoly {
 public:
  TruncPoly(std::size_t nvars, std::size_t cap);
  static TruncPoly monomial(std::size_t nvars, std::size_t cap, const Exponent& e, const Scalar& c = 1);

  std::size_t nvars() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }
  bool truncated() const noexcept { return truncated_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<Exponent, Scalar>& terms() const noexcept { return terms_; }

  void add(const Exponent& e, const Scalar& c);
  /// d/dx_i (0-based); never truncates.
  TruncPoly derivative(std::size_t i) const;

  TruncPoly& operator+=(const TruncPoly& other);
  TruncPoly& operator-=(const TruncPoly& other);
  TruncPoly& operator*=(const Scalar& s);

  /// Compares the retained terms only.
  friend bool operator==(const TruncPoly& a, const TruncPoly& b) { return a.terms_ == b.terms_; }

  friend TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);

 private:
  std::size_t n_;
  std::size_t cap_;
  bool truncated_ = false;
  std::map<Exponent, Scalar> terms_;
};

TruncPoly operator+(TruncPoly a, const TruncPoly& b);
TruncPoly operator-(TruncPoly a, const TruncPoly& b);

/// "3*x1^2*x2 + x2"; single-variable polynomials use x.
std::string to_string(const TruncPoly& p);

/// sum_i u_i d_i with one coefficient polynomial per direction.
class VecField {
 public:
  VecField(std::size_t nvars, std::size_t cap);
  /// x^e d_i, i 0-based.
  static VecField generator(std::size_t nvars, std::size_t cap, const Exponent& e, std::size_t i,
                            const Scalar& c = 1);

  std::size_t nvars() const noexcept { return coeff_.size(); }
  std::size_t cap() const noexcept { return coeff_.front().cap(); }
  const TruncPoly& coefficient(std::size_t i) const { return coeff_[i]; }
  TruncPoly& coefficient(std::size_t i) { return coeff_[i]; }
  bool truncated() const;
  bool is_zero() const;

  VecField& operator+=(const VecField& other);
  VecField& operator-=(const VecField& other);

  friend bool operator==(const VecField&, const VecField&) = default;

 private:
  std::vector<TruncPoly> coeff_;
};

VecField operator+(VecField a, const VecField& b);
VecField operator-(VecField a, const VecField& b);

std::string to_string(const VecField& f);

/// u d_i o v d_j = v d_j(u) d_i, extended bilinearly.
VecField vec_product(const VecField& f, const VecField& g);

/// (f o g) o h - f o (g o h), expanded from the product.
VecField witt_associator(const VecField& f, const VecField& g, const VecField& h);
/// sum over i, j, k of w_k v_j d_k d_j(u_i) d_i, for f = sum u_i d_i etc.
VecField witt_associator_closed(const VecField& f, const VecField& g, const VecField& h);
/// [u d_i, v d_j] = u d_i(v) d_j - v d_j(u) d_i
VecField witt_bracket(const VecField& f, const VecField& g);

/// x^a d_i for every exponent with |a| <= D and every direction.
std::vector<VecField> monomial_generators(std::size_t nvars, std::size_t cap);

/// Outcome of a sweep over monomial-generator triples. Triples whose
/// computation truncated are skipped.
struct TripleSweep {
  bool holds = true;
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::optional<std::array<VecField, 3>> witness;
};

/// Closed-form associator equals the expanded one.
TripleSweep check_associator_closed_form(std::size_t nvars, std::size_t cap);
/// (f, g, h) = (f, h, g).
TripleSweep check_witt_right_symmetry(std::size_t nvars, std::size_t cap);
/// f o (g o h) = g o (f o h): left multiplications commute.
TripleSweep check_novikov_truncated(std::size_t nvars, std::size_t cap);
/// f o g - g o f = [g, f]: the commutator is the Witt bracket up to the
/// isomorphism x -> -x (pairs; third slot unused).
TripleSweep check_witt_bracket(std::size_t nvars, std::size_t cap);

/// Structure constants of span{x^a d_i : 1 <= |a| <= D} modulo degree > D.
/// Terms of degree > D span an ideal of the positive part, so this is a
/// genuine quotient algebra. Basis: exponents in graded lex order, then
/// direction.
Algebra witt_structure_algebra(std::size_t nvars, std::size_t cap);

}  // namespace lsawb
