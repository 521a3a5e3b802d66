#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsawb/algebra.hpp"
#include "lsawb/lie.hpp"
#include "lsawb/poly.hpp"
#include "lsawb/subspace.hpp"

namespace lsawb {

enum class Side { Left, Right, TwoSided };

/// Smallest ideal of the requested side containing `seed`, found by closing
/// under L(e_i) (left), R(e_i) (right) or both until the dimension is stable.
Subspace ideal_generated(const Algebra& a, const Subspace& seed, Side side);
Subspace ideal_generated(const Algebra& a, const Vector& seed, Side side);

bool is_left_ideal(const Algebra& a, const Subspace& s);
bool is_right_ideal(const Algebra& a, const Subspace& s);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);

/// Basis of the associative algebra generated by Id, L(e_i) and R(e_i).
std::vector<Matrix> multiplication_algebra(const Algebra& a);

enum class Verdict { Simple, NotSimple, Inconclusive };
std::string to_string(Verdict v);

/// Irreducibility witness: `element` lies in the multiplication algebra,
/// `factor` is an irreducible factor of its characteristic polynomial whose
/// evaluated kernel has dimension deg(factor), and a kernel vector spins to the
/// whole algebra both in the module and in its dual.
struct NortonCertificate {
  std::size_t schedule_index = 0;
  Matrix element;
  Poly factor;
  std::size_t kernel_dim = 0;
};

struct SimplicityVerdict {
  Verdict verdict = Verdict::Inconclusive;
  /// Proper nonzero two-sided ideal when NotSimple.
  std::optional<Subspace> witness;
  std::optional<NortonCertificate> certificate;
  std::size_t elements_tried = 0;
  std::string note;
};

/// Number of multiplication-algebra elements tried before giving up.
inline constexpr std::size_t kSimplicityBudget = 64;

/// Phase 1 spins basis vectors and pairwise sums; phase 2 runs a MeatAxe-style
/// irreducibility test on the multiplication-algebra module.
SimplicityVerdict is_simple(const Algebra& a, std::uint64_t seed = kDefaultSeed);

/// Re-checks a certificate from scratch.
bool verify_certificate(const Algebra& a, const NortonCertificate& cert);

struct FingerprintOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  /// Highest cohomology degree computed (0 skips cohomology).
  std::size_t degree_cap = 3;
};

/// Isomorphism invariants used to compare algebras. Equal fingerprints do not
/// certify isomorphism.
struct Fingerprint {
  std::size_t dim = 0;
  bool complete = false;
  std::size_t dim_trace_subspace = 0;
  std::size_t dim_koszul = 0;
  std::size_t dim_trace_form = 0;
  std::size_t dim_solvable = 0;
  std::size_t dim_nil = 0;
  bool lie_abelian = false;
  bool lie_nilpotent = false;
  bool lie_solvable = false;
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_dims;
  std::size_t center_dim = 0;
  Verdict simplicity = Verdict::Inconclusive;
  std::size_t dim_derivations = 0;
  std::vector<std::size_t> cohomology_dims;  // H^1 .. H^cap
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint structural_fingerprint(const Algebra& a, const FingerprintOptions& options = {});

}  // namespace lsawb
