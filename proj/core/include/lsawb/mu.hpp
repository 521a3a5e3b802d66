#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsawb/matrix.hpp"
#include "lsawb/scalar.hpp"

namespace lsawb {

/// Largest index accepted by partition_numbers and p_nk.
inline constexpr std::size_t kMaxPartitionIndex = 200;
/// Largest n accepted by the asymptotic sweep.
inline constexpr std::size_t kMaxAsymptoticN = 120;

/// Rational constant of the bound p(n,k) < c 2^n / sqrt(n).
inline const Scalar kTwoPowerConstant{113, 40};
/// The constant sqrt(2/3) pi of the exponential bounds is transcendental; it
/// only exists as an enclosure, see asymptotic_bounds_check.

/// p(0..upto) by Euler's pentagonal recurrence.
std::vector<Integer> partition_numbers(std::size_t upto);
Integer binomial(std::size_t n, std::size_t k);

/// p(n,k) = sum_{j=0..k} C(n-j, k-j) p(j), 0 <= k <= n <= 200.
Integer p_nk(std::size_t n, std::size_t k);
/// C(n+k, k)
Integer b_nk(std::size_t n, std::size_t k);
/// n^k + 1
Integer reed_bound(std::size_t n, std::size_t k);
/// The closed forms for 0 <= k <= 5 (exact polynomial in n).
Integer p_nk_closed_form(std::size_t n, std::size_t k);

struct MuBoundReport {
  std::size_t n = 0, k = 0;
  Integer reed, de_graaf, p;
  bool ordered = false;  // p <= de_graaf <= reed
};
/// 1 <= k <= n. Throws InternalInconsistency if the ordering fails for n >= 2.
MuBoundReport mu_bound_report(std::size_t n, std::size_t k);

/// p(n,k), b(n,k), n^k + 1 for 0 <= k <= n <= n_max.
class MuTable {
 public:
  explicit MuTable(std::size_t n_max);
  std::size_t n_max() const noexcept { return n_max_; }
  const std::vector<Integer>& partitions() const noexcept { return partitions_; }
  const Integer& p(std::size_t n, std::size_t k) const { return p_.at(n).at(k); }
  const Integer& b(std::size_t n, std::size_t k) const { return b_.at(n).at(k); }
  const Integer& reed(std::size_t n, std::size_t k) const { return reed_.at(n).at(k); }
  /// First (n, k) where p(n+1,k) != p(n,k) + p(n,k-1), 1 <= k <= n < n_max.
  std::optional<std::pair<std::size_t, std::size_t>> recursion_violation() const;

 private:
  std::size_t n_max_;
  std::vector<Integer> partitions_;
  std::vector<std::vector<Integer>> p_, b_, reed_;
};

struct UnimodalityReport {
  std::size_t n = 0;
  std::size_t peak = 0;  // floor((n+3)/2)
  bool monotone_up = false;
  bool monotone_down = false;
  std::vector<Integer> values;  // p(n,1..n)
  bool holds() const { return monotone_up && monotone_down; }
};
/// n >= 4.
UnimodalityReport unimodality_check(std::size_t n);

enum class BoundFamily { TwoPower, ExpDiagonal, ExpSubdiagonal, PartialProduct };
std::string to_string(BoundFamily family);

struct BoundCheck {
  BoundFamily family = BoundFamily::TwoPower;
  std::size_t n = 0, k = 0;
  Integer lhs;
  /// Decimal enclosure of the right-hand side; empty for PartialProduct,
  /// whose right-hand side is rational and compared exactly.
  std::string rhs_lower, rhs_upper;
  bool exact = false;         // decided by integer arithmetic
  unsigned precision = 0;     // bits used when decided by an enclosure
  bool holds = false;
};

struct AsymptoticReport {
  std::size_t n_lo = 0, n_hi = 0;
  std::vector<BoundCheck> checks;
  bool all_hold() const;
  std::size_t count(BoundFamily family) const;
  std::optional<BoundCheck> first_failure() const;
};
/// Runs the four bound families for n_lo <= n <= n_hi (1 <= n_lo, n_hi <= 120):
///   p(n,k) < (113/40) 2^n / sqrt(n), 1 <= k <= n
///   p(n-1,n-1) < exp(alpha sqrt(n)),  alpha = sqrt(2/3) pi
///   p(n,n-1) < sqrt(n) exp(alpha sqrt(n))
///   p(n,k) < C(n,k) prod_{j=1..k} (1 - (k/n)^j)^{-1}, 2 <= k <= n-1
/// Enclosures start at 128 bits and widen up to 1024 before DomainError.
AsymptoticReport asymptotic_bounds_check(std::size_t n_lo, std::size_t n_hi);

enum class MuKind { Abelian, Heisenberg, TwoStepCenter, SchurJacobson };
std::string to_string(MuKind kind);
MuKind parse_mu_kind(std::string_view text);

struct MuFormula {
  MuKind kind = MuKind::Abelian;
  std::size_t parameter = 0;
  std::size_t value = 0;
  /// Abelian case: basis of a commutative subalgebra of M_value(K) of
  /// dimension floor(value^2/4) + 1 >= parameter.
  std::vector<Matrix> witness;
};
/// Abelian: parameter n = dim. Heisenberg: parameter m. TwoStepCenter:
/// parameter n = dim (odd). SchurJacobson: parameter d, value is the maximal
/// dimension of a commutative subalgebra of M_d(K).
MuFormula mu_formula(MuKind kind, std::size_t parameter);

/// Basis of {lambda I + X : X supported on the upper-right floor(d/2) x ceil(d/2) block}.
std::vector<Matrix> commutative_block_algebra(std::size_t d);

}  // namespace lsawb
