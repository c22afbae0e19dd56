// Certificates built on the graded linear algebra: powers of c_k inside
// (e_0) and inside right ideals R_j A, admissibility and pertinency
// reports, bounded saturation by c_m, the subalgebra generated by
// b_0..b_{m-1}, and exact checks of the bracket identities used to show
// c_m^N lies in R_1 A.

#ifndef SKEWLAB_CERTIFY_HPP
#define SKEWLAB_CERTIFY_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "skewlab/graded_linalg.hpp"

namespace skewlab {

/// A computed certificate failed its own re-check, or two independent
/// routes disagree.
class Inconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBounds {
  int max_power = 8;
  int max_degree = 12;
  /// Reject candidates over F_p before any exact work. A rejection mod p
  /// is a proof; acceptances are always confirmed exactly.
  bool modular_screen = false;
};

/// found(exponent, witness) or unknown_at(searched bounds).
struct SearchStatus {
  long index = 0;
  std::string target;
  bool found = false;
  int exponent = 0;
  std::optional<MembershipWitness> witness;
  int searched_exponent = 0;
  int max_degree = 0;
  /// The witness times c_index recombines to the next power.
  bool monotone_checked = false;
};

struct PhiReport {
  int n = 0;
  std::vector<SearchStatus> entries;
  /// Set when every k in Z_n was searched.
  bool special_subset_checked = false;
  bool special_subset_holds = false;

  std::vector<int> found_set() const;
};

/// Least N <= max_power with 2N <= max_degree and c_k^N in (e_0)_{2N}.
SearchStatus phi_membership(const AlgebraContext& ctx, long k, const SearchBounds& bounds = {});
/// Runs phi_membership for each index in `ks` (all of Z_n when empty).
PhiReport phi_report(const AlgebraContext& ctx, std::vector<int> ks = {}, const SearchBounds& bounds = {});

/// {k in Z_n : gcd(k, n) is a power of 2}, with gcd(0, n) = n.
std::vector<int> phi2_set(int n);
/// True iff `found` is closed under multiplication by units of Z_n.
bool special_subset_check(int n, const std::vector<int>& found);

struct PsiReport {
  int n = 0;
  long j = 0;
  std::vector<int> quotient_by;
  std::vector<SearchStatus> entries;
};

/// Least N with c_i^N in (R_j A + sum_{k in F} c_k A)_{2N}; every status in
/// `quotient_by` must be found with a valid witness.
SearchStatus psi_membership(const AlgebraContext& ctx, long i, long j,
                            const std::vector<SearchStatus>& quotient_by = {}, const SearchBounds& bounds = {});
PsiReport psi_report(const AlgebraContext& ctx, long j, const std::vector<SearchStatus>& quotient_by = {},
                     const SearchBounds& bounds = {});

/// Dimension growth read off a finite Hilbert profile.
struct GrowthEvidence {
  bool all_positive = false;
  bool nondecreasing = false;
  /// Least k such that the tail is a polynomial of degree k; -1 if none.
  int fitted_degree = -1;
  /// fitted_degree + 1, the GK dimension the profile suggests.
  int gk_estimate = -1;
};

GrowthEvidence growth_evidence(const std::vector<uint64_t>& dims);

struct PertinencyReport {
  int n = 0;
  HilbertProfile hilbert;
  /// p(A, C_n) = n, certified by H(d*) = H(d*+1) = 0.
  bool equals_n = false;
  GrowthEvidence growth;
};

/// Throws Inconsistency when the exact and F_p profiles disagree.
PertinencyReport pertinency_report(const AlgebraContext& ctx, int max_degree = 12);

struct AdmissibilityReport {
  int n = 0;
  HilbertProfile hilbert;
  bool admissible = false;
  /// One report per j, listed when run_psi was requested.
  std::vector<PsiReport> psi;
};

AdmissibilityReport admissibility_report(const AlgebraContext& ctx, const SearchBounds& bounds = {},
                                         bool run_psi = true);

/// Least t <= max_t with c_m^t x in (R_1 A + sum_{k in K} c_k A)_{deg x + 2t}.
SearchStatus gamma_saturated_membership(const AlgebraContext& ctx, long m, const AlgElem& x,
                                        const std::vector<SearchStatus>& saturating = {}, int max_t = -1);

struct ClaimResult {
  std::string statement;
  bool holds = false;
  AlgElem lhs;
  AlgElem rhs;
  /// lhs - rhs; zero when the identity holds.
  AlgElem residual;
};

/// [b_{j+1} b_{m-j}, c_m^s b_j] = c_m^{s+1} b_{j+1} - c_m^s c_{2j+1} b_{m-j}.
ClaimResult verify_claim1(const AlgebraContext& ctx, int m, int j, int s);
/// The two bracket expansions that move c_m^s b_k to c_m^{s+2} b_{k+2}, m = 2k+1.
std::pair<ClaimResult, ClaimResult> verify_claim2(const AlgebraContext& ctx, int m, int k, int s);
/// c_m^{m-1} = [c_m^{m/2-1} b_{m/2}, c_m^{m/2-1} b_{m/2}], m even.
ClaimResult verify_claim3_even(const AlgebraContext& ctx, int m);
/// c_m^{2k} = [c_m^{k-2} b_{k-1}, c_m^{k+1} b_{k+2}], m = 2k+1, k > 2.
ClaimResult verify_claim3_odd(const AlgebraContext& ctx, int m);

/// b_0..b_{m-1} inside A_n for n = m q, compared against the relations of
/// k_{-1}[y_0..y_{m-1}] written in the b-basis with indices mod m.
struct TildeContext {
  int n = 0;
  int m = 0;
  int q = 0;
  std::vector<AlgElem> generators;
  std::string isomorphism;
  /// [b_0, b_k] = [b_l, b_{k-l mod m}]; failures are recorded, not hidden.
  std::vector<RelationCheck> relations;

  static TildeContext make(const AlgebraContext& ctx, int m);
  bool relations_hold() const;
};

struct TildeEntry {
  int degree = 0;
  std::string word;
  AlgElem element;
  SearchStatus status;
};

struct TildeReport {
  TildeContext context;
  std::vector<TildeEntry> entries;
  bool all_found() const;
};

/// For a word basis of the degree <= sample_degree pieces of the right
/// ideal of <b_0..b_{m-1}> generated by words of b-weight 1 mod m, finds
/// the least t with word * c_m^t in R_1 A.
TildeReport tilde_inclusion_check(const AlgebraContext& ctx, int m, int sample_degree, int max_t = -1);

}  // namespace skewlab

#endif  // SKEWLAB_CERTIFY_HPP
