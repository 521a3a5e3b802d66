#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsawb/algebra.hpp"
#include "lsawb/subspace.hpp"

namespace lsawb {

/// How far a computed radical can be trusted.
enum class Certificate { Exact, HeuristicLowerBound };
std::string to_string(Certificate c);

struct ProbeOptions {
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
};

/// Seeded probe vectors: entries in [-3, 3].
std::vector<Vector> sample_vectors(std::size_t dim, const ProbeOptions& options);

/// T(A) = {x : tr R(x) = 0}
Subspace trace_subspace(const Algebra& a);

struct CompletenessReport {
  bool complete = false;
  /// tr R(e_i)
  std::vector<Scalar> basis_traces;
  /// char_poly(R(e_i)) == t^n
  std::vector<bool> basis_right_nilpotent;
  /// det(Id + R(x)) != 0 on the basis and every sample
  bool unit_shift_invertible = true;
  std::size_t unit_shift_checks = 0;
};

/// Decides completeness by tr R(e_i) = 0 and cross-checks right nilpotency
/// and invertibility of Id + R(x). Throws DomainError for a non-LSA and
/// InternalInconsistency if the witnesses disagree.
CompletenessReport is_complete(const Algebra& a, const ProbeOptions& options = {});

/// Greatest left ideal contained in w (descending fixed point).
Subspace largest_left_ideal_in(const Algebra& a, const Subspace& w);
/// Greatest two-sided ideal contained in w.
Subspace largest_ideal_in(const Algebra& a, const Subspace& w);

struct KoszulRadical {
  Subspace radical;
  bool right_ideal = false;
  bool two_sided = false;
};
/// rad(A): the largest left ideal inside T(A).
KoszulRadical koszul_radical(const Algebra& a);

/// Gram matrix of s(x, y) = tr R(x) R(y) on the basis.
Matrix trace_form_gram(const Algebra& a);
/// A-perp: kernel of the trace form.
Subspace trace_form_radical(const Algebra& a);

/// Both throw DomainError unless i is a two-sided ideal.
bool is_solvable_ideal(const Algebra& a, const Subspace& i);
bool is_left_nilpotent_ideal(const Algebra& a, const Subspace& i);

struct RadicalResult {
  Subspace space;
  Certificate status = Certificate::HeuristicLowerBound;
  std::string reason;
};

/// Probe saturation: sum of the solvable ideals generated by probe vectors,
/// repeated in the quotient until nothing new appears.
RadicalResult solvable_radical(const Algebra& a, const ProbeOptions& options = {});
/// Same scheme for left-nilpotent ideals, with the exact shortcut nil = rad
/// when g_A is nilpotent.
RadicalResult nil_radical(const Algebra& a, const ProbeOptions& options = {});

struct NilSetProbe {
  std::vector<Vector> members;
  std::vector<Vector> non_members;
  Subspace member_span;
  /// True only when g_A is nilpotent, where S is known to be the subspace rad(A).
  bool exact = false;
};
/// Tests R(a) nilpotent for basis vectors and seeded samples.
NilSetProbe nil_set_probe(const Algebra& a, const ProbeOptions& options = {});

struct RadicalReport {
  Subspace trace_subspace;
  Subspace koszul;
  Subspace trace_form;
  Subspace solvable;
  Subspace nil;
  bool koszul_right_ideal = false;
  bool koszul_two_sided = false;
  std::vector<Vector> s_probe_members;
  bool complete = false;
  bool inclusions_hold = false;
  Certificate trace_status = Certificate::Exact;
  Certificate koszul_status = Certificate::Exact;
  Certificate trace_form_status = Certificate::Exact;
  Certificate solvable_status = Certificate::HeuristicLowerBound;
  Certificate nil_status = Certificate::HeuristicLowerBound;
};

/// Everything above, plus the check nil <= rad <= A-perp <= T(A).
RadicalReport radical_tower(const Algebra& a, const ProbeOptions& options = {});

struct ClanReport {
  bool form_symmetric = false;
  bool form_positive = false;
  bool eigen_real_probe = false;
  std::optional<Vector> unit;
};
/// Vinberg's clan conditions with s(a) = tr L(a), plus a two-sided unit.
ClanReport clan_check(const Algebra& a, const ProbeOptions& options = {});

/// B = End(A) + A with (f,a)(g,b) = (fg + [L(a),g], ab + f(b) + g(a)).
/// Basis: E_pq at index p*n + q, then e_i at n*n + i.
Algebra helmstetter_extension(const Algebra& a);

/// A / I with the complement basis given by the non-pivot columns of I.
struct Quotient {
  Algebra algebra;
  std::vector<std::size_t> complement;  // coordinates of A kept in A/I
  Subspace ideal;
  Vector project(const Vector& x) const;
  Vector lift(const Vector& y) const;
};
Quotient quotient_algebra(const Algebra& a, const Subspace& ideal);

}  // namespace lsawb
