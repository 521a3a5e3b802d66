#include "interval.hpp"

#include <cstdlib>
#include <memory>

namespace lsawb::detail {

namespace {

std::string format(const mpfr_t x, mpfr_rnd_t rnd, int digits) {
  char* raw = nullptr;
  const std::string fmt = "%." + std::to_string(digits) + "R*g";
  mpfr_asprintf(&raw, fmt.c_str(), rnd, x);
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

Interval::Interval(mpfr_prec_t precision) : precision_(precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
}

Interval::Interval(const Interval& other) : Interval(other.precision_) {
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::exact(const Integer& value, mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_set_z(r.lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, value.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t precision) {
  Interval r(precision);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt() const {
  Interval r(precision_);
  mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::exp() const {
  Interval r(precision_);
  mpfr_exp(r.lo_, lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator*(const Interval& other) const {
  Interval r(precision_);
  mpfr_mul(r.lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_mul(r.hi_, hi_, other.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator/(const Interval& other) const {
  Interval r(precision_);
  mpfr_div(r.lo_, lo_, other.hi_, MPFR_RNDD);
  mpfr_div(r.hi_, hi_, other.lo_, MPFR_RNDU);
  return r;
}

std::string Interval::lo_string(int digits) const { return format(lo_, MPFR_RNDD, digits); }
std::string Interval::hi_string(int digits) const { return format(hi_, MPFR_RNDU, digits); }

Decision compare_below(const Integer& value, const Interval& bound) {
  if (mpfr_cmp_z(bound.lo(), value.get_mpz_t()) > 0) return Decision::Below;
  if (mpfr_cmp_z(bound.hi(), value.get_mpz_t()) <= 0) return Decision::NotBelow;
  return Decision::Undecided;
}

}  // namespace lsawb::detail
