#include "lsawb/mu.hpp"

#include <array>

#include "interval.hpp"
#include "lsawb/error.hpp"
#include "lsawb/subspace.hpp"

namespace lsawb {

namespace {

using detail::Decision;
using detail::Interval;

void check_range(std::size_t n, std::size_t k) {
  if (k > n || n > kMaxPartitionIndex)
    throw DomainError("p(n,k) needs 0 <= k <= n <= " + std::to_string(kMaxPartitionIndex));
}

Integer power(std::size_t base, std::size_t exponent) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exponent);
  return r;
}

// p(n-1,n-1) < e^{alpha sqrt n} (with_sqrt = false) or p(n,n-1) < sqrt(n) e^{alpha sqrt n}.
Interval exponential_bound(std::size_t n, bool with_sqrt, mpfr_prec_t precision) {
  const Interval root_n = Interval::exact(Integer(static_cast<unsigned long>(n)), precision).sqrt();
  const Interval alpha = (Interval::exact(2, precision) / Interval::exact(3, precision)).sqrt() *
                         Interval::pi(precision);
  const Interval e = (alpha * root_n).exp();
  return with_sqrt ? e * root_n : e;
}

Interval two_power_bound(std::size_t n, mpfr_prec_t precision) {
  const Interval num = Interval::exact(113 * power(2, n), precision);
  const Interval den = Interval::exact(40, precision) *
                       Interval::exact(Integer(static_cast<unsigned long>(n)), precision).sqrt();
  return num / den;
}

constexpr std::array<mpfr_prec_t, 4> kPrecisions{128, 256, 512, 1024};

template <class Make>
BoundCheck decide(BoundFamily family, std::size_t n, std::size_t k, const Integer& lhs, Make make) {
  for (mpfr_prec_t precision : kPrecisions) {
    const Interval bound = make(precision);
    const Decision d = detail::compare_below(lhs, bound);
    if (d == Decision::Undecided) continue;
    BoundCheck c;
    c.family = family;
    c.n = n;
    c.k = k;
    c.lhs = lhs;
    c.rhs_lower = bound.lo_string();
    c.rhs_upper = bound.hi_string();
    c.precision = static_cast<unsigned>(precision);
    c.holds = d == Decision::Below;
    return c;
  }
  throw DomainError("enclosure of the " + to_string(family) + " bound at n = " + std::to_string(n) +
                    " is too wide to decide at 1024 bits");
}

}  // namespace

std::vector<Integer> partition_numbers(std::size_t upto) {
  if (upto > kMaxPartitionIndex)
    throw DomainError("partition numbers are provided up to " + std::to_string(kMaxPartitionIndex));
  std::vector<Integer> p(upto + 1);
  p[0] = 1;
  for (std::size_t m = 1; m <= upto; ++m) {
    Integer sum = 0;
    for (std::size_t j = 1;; ++j) {
      const std::size_t g1 = j * (3 * j - 1) / 2;
      if (g1 > m) break;
      const bool plus = j % 2 == 1;
      const std::size_t g2 = j * (3 * j + 1) / 2;
      Integer term = p[m - g1];
      if (g2 <= m) term += p[m - g2];
      if (plus) sum += term;
      else sum -= term;
    }
    p[m] = sum;
  }
  return p;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer p_nk(std::size_t n, std::size_t k) {
  check_range(n, k);
  const auto p = partition_numbers(k);
  Integer sum = 0;
  for (std::size_t j = 0; j <= k; ++j) sum += binomial(n - j, k - j) * p[j];
  return sum;
}

Integer b_nk(std::size_t n, std::size_t k) { return binomial(n + k, k); }

Integer reed_bound(std::size_t n, std::size_t k) { return power(n, k) + 1; }

Integer p_nk_closed_form(std::size_t n, std::size_t k) {
  const Integer x(static_cast<unsigned long>(n));
  Integer num, den;
  switch (k) {
    case 0: return 1;
    case 1: return x + 1;
    case 2: num = x * x + x + 2; den = 2; break;
    case 3: num = x * x * x + 5 * x; den = 6; break;
    case 4: num = x * x * x * x - 2 * x * x * x + 11 * x * x - 10 * x + 24; den = 24; break;
    case 5:
      num = x * x * x * x * x - 5 * x * x * x * x + 25 * x * x * x - 55 * x * x + 154 * x - 240;
      den = 120;
      break;
    default: throw DomainError("closed forms exist for k <= 5");
  }
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw InternalInconsistency("closed form for p(n," + std::to_string(k) + ") is not integral");
  return Integer(num / den);
}

MuBoundReport mu_bound_report(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("mu bounds need 1 <= k <= n");
  MuBoundReport r{n, k, reed_bound(n, k), b_nk(n, k), p_nk(n, k), false};
  r.ordered = r.p <= r.de_graaf && r.de_graaf <= r.reed;
  if (r.p > r.de_graaf || r.p > r.reed)
    throw InternalInconsistency("p(n,k) <= min(C(n+k,k), n^k + 1) fails at n = " + std::to_string(n) +
                                ", k = " + std::to_string(k));
  return r;
}

MuTable::MuTable(std::size_t n_max) : n_max_(n_max) {
  if (n_max > kMaxPartitionIndex) throw DomainError("table size exceeds the partition bound");
  partitions_ = partition_numbers(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    std::vector<Integer> p_row, b_row, r_row;
    for (std::size_t k = 0; k <= n; ++k) {
      Integer sum = 0;
      for (std::size_t j = 0; j <= k; ++j) sum += binomial(n - j, k - j) * partitions_[j];
      p_row.push_back(sum);
      b_row.push_back(b_nk(n, k));
      r_row.push_back(reed_bound(n, k));
    }
    p_.push_back(std::move(p_row));
    b_.push_back(std::move(b_row));
    reed_.push_back(std::move(r_row));
  }
}

std::optional<std::pair<std::size_t, std::size_t>> MuTable::recursion_violation() const {
  for (std::size_t n = 1; n < n_max_; ++n)
    for (std::size_t k = 1; k <= n; ++k)
      if (p_[n + 1][k] != p_[n][k] + p_[n][k - 1]) return std::make_pair(n, k);
  return std::nullopt;
}

UnimodalityReport unimodality_check(std::size_t n) {
  if (n < 4) throw DomainError("unimodality is stated for n >= 4");
  if (n > kMaxPartitionIndex) throw DomainError("n exceeds the partition bound");
  UnimodalityReport r;
  r.n = n;
  r.peak = (n + 3) / 2;
  const auto p = partition_numbers(n);
  for (std::size_t k = 1; k <= n; ++k) {
    Integer sum = 0;
    for (std::size_t j = 0; j <= k; ++j) sum += binomial(n - j, k - j) * p[j];
    r.values.push_back(sum);
  }
  r.monotone_up = true;
  for (std::size_t k = 1; k < r.peak; ++k)
    if (!(r.values[k - 1] < r.values[k])) r.monotone_up = false;
  r.monotone_down = true;
  for (std::size_t k = r.peak; k < n; ++k)
    if (!(r.values[k - 1] > r.values[k])) r.monotone_down = false;
  return r;
}

std::string to_string(BoundFamily family) {
  switch (family) {
    case BoundFamily::TwoPower: return "two-power";
    case BoundFamily::ExpDiagonal: return "exp-diagonal";
    case BoundFamily::ExpSubdiagonal: return "exp-subdiagonal";
    case BoundFamily::PartialProduct: return "partial-product";
  }
  return "?";
}

bool AsymptoticReport::all_hold() const {
  for (const auto& c : checks)
    if (!c.holds) return false;
  return true;
}

std::size_t AsymptoticReport::count(BoundFamily family) const {
  std::size_t total = 0;
  for (const auto& c : checks) total += c.family == family;
  return total;
}

std::optional<BoundCheck> AsymptoticReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.holds) return c;
  return std::nullopt;
}

AsymptoticReport asymptotic_bounds_check(std::size_t n_lo, std::size_t n_hi) {
  if (n_lo < 1 || n_lo > n_hi || n_hi > kMaxAsymptoticN)
    throw DomainError("asymptotic bounds need 1 <= n_lo <= n_hi <= " + std::to_string(kMaxAsymptoticN));
  AsymptoticReport report;
  report.n_lo = n_lo;
  report.n_hi = n_hi;
  const MuTable table(n_hi);
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    // p^2 * 1600 n < 113^2 4^n decides p < (113/40) 2^n / sqrt(n) exactly.
    const Integer rhs = 113 * 113 * power(4, n);
    const Interval shown = two_power_bound(n, kPrecisions.front());
    for (std::size_t k = 1; k <= n; ++k) {
      const Integer& p = table.p(n, k);
      BoundCheck c;
      c.family = BoundFamily::TwoPower;
      c.n = n;
      c.k = k;
      c.lhs = p;
      c.rhs_lower = shown.lo_string();
      c.rhs_upper = shown.hi_string();
      c.exact = true;
      c.holds = p * p * 1600 * static_cast<unsigned long>(n) < rhs;
      report.checks.push_back(std::move(c));
    }
    report.checks.push_back(decide(BoundFamily::ExpDiagonal, n, n - 1, table.p(n - 1, n - 1),
                                   [n](mpfr_prec_t pr) { return exponential_bound(n, false, pr); }));
    report.checks.push_back(decide(BoundFamily::ExpSubdiagonal, n, n - 1, table.p(n, n - 1),
                                   [n](mpfr_prec_t pr) { return exponential_bound(n, true, pr); }));
    for (std::size_t k = 2; k + 1 <= n; ++k) {
      // p prod (n^j - k^j) < C(n,k) n^{k(k+1)/2}
      Integer lhs = table.p(n, k);
      for (std::size_t j = 1; j <= k; ++j) lhs *= power(n, j) - power(k, j);
      const Integer rhs_pp = binomial(n, k) * power(n, k * (k + 1) / 2);
      BoundCheck c;
      c.family = BoundFamily::PartialProduct;
      c.n = n;
      c.k = k;
      c.lhs = table.p(n, k);
      c.exact = true;
      c.holds = lhs < rhs_pp;
      report.checks.push_back(std::move(c));
    }
  }
  return report;
}

std::string to_string(MuKind kind) {
  switch (kind) {
    case MuKind::Abelian: return "abelian";
    case MuKind::Heisenberg: return "heisenberg";
    case MuKind::TwoStepCenter: return "two-step-center";
    case MuKind::SchurJacobson: return "schur-jacobson";
  }
  return "?";
}

MuKind parse_mu_kind(std::string_view text) {
  for (MuKind k : {MuKind::Abelian, MuKind::Heisenberg, MuKind::TwoStepCenter, MuKind::SchurJacobson})
    if (text == to_string(k)) return k;
  throw DomainError("unknown formula kind '" + std::string(text) +
                    "' (expected abelian, heisenberg, two-step-center or schur-jacobson)");
}

std::vector<Matrix> commutative_block_algebra(std::size_t d) {
  if (d == 0) throw DomainError("degree must be positive");
  const std::size_t a = d / 2;
  std::vector<Matrix> basis{Matrix::identity(d)};
  for (std::size_t r = 0; r < a; ++r)
    for (std::size_t c = a; c < d; ++c) {
      Matrix m(d, d);
      m(r, c) = 1;
      basis.push_back(std::move(m));
    }
  return basis;
}

MuFormula mu_formula(MuKind kind, std::size_t parameter) {
  if (parameter < 1) throw DomainError("parameter must be at least 1");
  MuFormula f{kind, parameter, 0, {}};
  switch (kind) {
    case MuKind::Abelian: {
      // smallest d with d^2 >= 4(n-1); a 1-dim algebra still needs degree 1
      std::size_t d = 1;
      while (d * d < 4 * (parameter - 1)) ++d;
      f.value = d;
      f.witness = commutative_block_algebra(d);
      for (std::size_t i = 0; i < f.witness.size(); ++i)
        for (std::size_t j = i + 1; j < f.witness.size(); ++j)
          if (!commutator(f.witness[i], f.witness[j]).is_zero())
            throw InternalInconsistency("block witness is not commutative");
      std::vector<Vector> flat;
      for (const auto& m : f.witness) flat.push_back(m.entries());
      const std::size_t dim = Subspace::span(d * d, flat).dim();
      if (dim != d * d / 4 + 1 || dim < parameter)
        throw InternalInconsistency("block witness has dimension " + std::to_string(dim));
      break;
    }
    case MuKind::Heisenberg: f.value = parameter + 2; break;
    case MuKind::TwoStepCenter:
      if (parameter < 3 || parameter % 2 == 0)
        throw DomainError("a 2-step nilpotent algebra with 1-dimensional center has odd dimension >= 3");
      f.value = (parameter + 3) / 2;
      break;
    case MuKind::SchurJacobson: f.value = parameter * parameter / 4 + 1; break;
  }
  return f;
}

}  // namespace lsawb
