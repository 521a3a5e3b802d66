#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lsawb {

/// Exact rational. gmpxx keeps results of arithmetic canonical; values built
/// through parse_scalar() are canonicalized on entry.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Coordinates of an element of a finite-dimensional space.
using Vector = std::vector<Scalar>;

/// Parses "p/q", "-p/q" or an integer. Rejects zero denominators, whitespace
/// and anything else.
Scalar parse_scalar(std::string_view text);

/// num/den in lowest terms (gmpxx's two-argument constructor does not reduce).
Scalar rational(long num, long den = 1);

/// Canonical text: "p/q" with q > 1, or "p".
std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t index);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
Scalar dot(const Vector& a, const Vector& b);

/// Deterministic source of small random rationals and vectors.
class SampleSource {
 public:
  explicit SampleSource(std::uint64_t seed);

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  /// Vector with integer entries in [lo, hi].
  Vector vector(std::size_t n, long lo = -3, long hi = 3);

 private:
  std::mt19937_64 engine_;
};

/// Default seed for every probe set in the workbench.
inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;
inline constexpr std::size_t kDefaultSamples = 32;

}  // namespace lsawb
