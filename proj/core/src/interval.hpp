#pragma once

#include <mpfr.h>

#include <string>

#include "lsawb/scalar.hpp"

namespace lsawb::detail {

/// Closed interval [lo, hi] of MPFR numbers with outward rounding. Only the
/// operations needed on positive quantities are provided.
class Interval {
 public:
  explicit Interval(mpfr_prec_t precision);
  Interval(const Interval& other);
  Interval& operator=(const Interval&) = delete;
  ~Interval();

  static Interval exact(const Integer& value, mpfr_prec_t precision);
  static Interval pi(mpfr_prec_t precision);

  mpfr_prec_t precision() const { return precision_; }
  const mpfr_t& lo() const { return lo_; }
  const mpfr_t& hi() const { return hi_; }

  // All operands must be strictly positive.
  Interval sqrt() const;
  Interval exp() const;
  Interval operator*(const Interval& other) const;
  Interval operator/(const Interval& other) const;

  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;

 private:
  mpfr_prec_t precision_;
  mpfr_t lo_, hi_;
};

enum class Decision { Below, NotBelow, Undecided };
/// Below if value < lo, NotBelow if value >= hi.
Decision compare_below(const Integer& value, const Interval& bound);

}  // namespace lsawb::detail
