// Degree-truncated linear algebra in A and A#C_n: subspaces of one graded
// piece, membership with witnesses, graded pieces of the two-sided ideal
// (e_0) and of right ideals R_gamma A + sum c_k A, Hilbert functions of
// A#C_n/(e_0), and the same computations over F_p for screening.

#ifndef SKEWLAB_GRADED_LINALG_HPP
#define SKEWLAB_GRADED_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewlab/echelon.hpp"
#include "skewlab/fields.hpp"
#include "skewlab/smash_product.hpp"

namespace skewlab {

struct PieceDescriptor {
  int n = 0;
  int degree = 0;
  bool smash = false;

  std::size_t dim() const;
};

/// Column numbering of one graded piece. Plain pieces use the monomial
/// rank; smash pieces put x^a # s^i at rank(a) * n + i.
class PieceIndex {
 public:
  PieceIndex(int n, int degree, bool smash);

  const PieceDescriptor& descriptor() const { return desc_; }
  std::size_t dim() const { return desc_.dim(); }
  uint32_t column(const Monomial& m, int power = 0) const;
  SmashKey key(uint32_t col) const;

  template <class Field>
  SparseRow<typename Field::Element> to_row(const AlgElem& u, const Field& f) const;
  template <class Field>
  SparseRow<typename Field::Element> to_row(const SmashElem& u, const Field& f) const;

  AlgElem to_plain(const AlgebraContext& ctx, const SparseRow<CycNumber>& row) const;
  SmashElem to_smash(const AlgebraContext& ctx, const SparseRow<CycNumber>& row) const;

 private:
  void check_degree(std::optional<int> d, bool is_zero) const;

  PieceDescriptor desc_;
  std::vector<Monomial> monomials_;
};

/// A subspace of one graded piece, stored as its reduced echelon basis.
template <class Field>
class GradedSubspace {
 public:
  using Scalar = typename Field::Element;

  GradedSubspace(const AlgebraContext& ctx, int degree, bool smash, const Field& field, bool track = false)
      : ctx_(ctx), index_(ctx.n(), degree, smash), echelon_(field, index_.dim(), track) {}

  const AlgebraContext& context() const { return ctx_; }
  const PieceIndex& index() const { return index_; }
  const PieceDescriptor& ambient() const { return index_.descriptor(); }
  const Echelon<Field>& echelon() const { return echelon_; }
  Echelon<Field>& echelon() { return echelon_; }
  const Field& field() const { return echelon_.field(); }

  int degree() const { return ambient().degree; }
  std::size_t rank() const { return echelon_.rank(); }
  std::size_t ambient_dim() const { return index_.dim(); }
  std::size_t codim() const { return ambient_dim() - rank(); }

  template <class Elem>
  bool add(const Elem& u, std::size_t id = 0) {
    return echelon_.insert(index_.to_row(u, field()), id);
  }
  template <class Elem>
  bool contains(const Elem& u) const {
    return echelon_.contains(index_.to_row(u, field()));
  }

 private:
  AlgebraContext ctx_;
  PieceIndex index_;
  Echelon<Field> echelon_;
};

using SubspaceBasis = GradedSubspace<CyclotomicField>;

/// Basis rows of an exact subspace as elements.
std::vector<AlgElem> basis_elements(const SubspaceBasis& sub);
std::vector<SmashElem> basis_smash_elements(const SubspaceBasis& sub);

/// One summand coefficient * left * generator * right of a membership
/// certificate; generator_label names the generating family ("e0", "R1",
/// "c3", ...).
struct WitnessTerm {
  CycNumber coefficient;
  SmashElem left;
  SmashElem generator;
  SmashElem right;
  std::string generator_label;
};

struct MembershipWitness {
  SmashElem target;
  std::vector<WitnessTerm> terms;

  SmashElem recombine() const;
  bool valid() const { return recombine() == target; }
};

struct MembershipResult {
  bool contained = false;
  std::optional<MembershipWitness> witness;
};

SubspaceBasis span(const AlgebraContext& ctx, int degree, const std::vector<AlgElem>& vectors);
SubspaceBasis span_smash(const AlgebraContext& ctx, int degree, const std::vector<SmashElem>& vectors);

/// Membership of v in the span of `generators`; the witness writes v as a
/// combination of the generators (left = right = 1).
MembershipResult contains(const AlgebraContext& ctx, const std::vector<AlgElem>& generators, const AlgElem& v);

/// Basis of the w^{-gamma}-eigenspace of sigma on A_d, from projections of
/// sigma-orbit representatives.
SubspaceBasis r_gamma_basis(const AlgebraContext& ctx, long gamma, int d);

// ---------------------------------------------------------------------------
// The two-sided ideal (e_0) of A#C_n.

/// x^left * e_0 * (x^right # s^power).
struct IdealGenerator {
  Monomial left;
  Monomial right;
  int power = 0;
};

/// All generators of (e_0)_d: |left| + |right| = d, every power. Because
/// s e_0 = e_0 s = e_0, left group factors are absorbed.
std::vector<IdealGenerator> e0_generators(int n, int d);
SmashElem e0_generator_element(const AlgebraContext& ctx, const IdealGenerator& g);

template <class Field>
SparseRow<typename Field::Element> e0_generator_row(const AlgebraContext& ctx, const PieceIndex& index,
                                                     const IdealGenerator& g, const Field& f);

template <class Field>
GradedSubspace<Field> ideal_piece_e0(const AlgebraContext& ctx, int d, const Field& field, bool track = false,
                                     bool parallel = true) {
  GradedSubspace<Field> sub(ctx, d, true, field, track);
  const auto gens = e0_generators(ctx.n(), d);
  std::vector<SparseRow<typename Field::Element>> rows(gens.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::size_t i = 0; i < gens.size(); ++i) rows[i] = e0_generator_row(ctx, sub.index(), gens[i], field);
  if (parallel)
    sub.echelon().insert_all(rows);
  else
    sub.echelon().insert_all_serial(rows);
  return sub;
}

SubspaceBasis ideal_piece_e0(const AlgebraContext& ctx, int d);

/// Exact membership of a homogeneous target in (e_0), with witness.
MembershipResult ideal_e0_membership(const AlgebraContext& ctx, const SmashElem& target);

// ---------------------------------------------------------------------------
// Right ideals of A.

/// Generating space of a right ideal: optionally all of R_gamma, the central
/// c_k for k in `central`, and explicit homogeneous elements.
struct RightIdealSpec {
  std::optional<long> gamma;
  std::vector<int> central;
  std::vector<AlgElem> explicit_generators;
};

struct RightIdealGenerator {
  AlgElem element;
  std::string label;
};

/// Degree pieces of a right ideal, built upward with
/// (I)_d = (direct generators of degree d) + (I)_{d-1} * A_1.
/// With tracking, each basis row also keeps a flat expansion
/// sum coefficient * generator * right-monomial.
template <class Field>
class RightIdealLadder {
 public:
  using Scalar = typename Field::Element;
  struct FlatTerm {
    std::size_t generator;
    Monomial right;
    Scalar coefficient;
  };

  RightIdealLadder(const AlgebraContext& ctx, RightIdealSpec spec, const Field& field, bool track = false);

  const GradedSubspace<Field>& piece(int d);
  /// Every direct generator created so far; FlatTerm::generator indexes it.
  const std::vector<RightIdealGenerator>& generators() const { return gens_; }
  /// Flat expansion of a homogeneous target, or nullopt if it is not in the ideal.
  std::optional<std::vector<FlatTerm>> express(const AlgElem& target);

 private:
  using Flat = std::map<std::pair<std::size_t, Monomial>, Scalar>;

  void extend();
  std::vector<FlatTerm> flatten(int d, const typename Echelon<Field>::Combination& combo) const;
  Flat flatten_map(int d, const typename Echelon<Field>::Combination& combo) const;

  AlgebraContext ctx_;
  RightIdealSpec spec_;
  Field field_;
  bool track_;
  std::vector<GradedSubspace<Field>> levels_;
  std::vector<RightIdealGenerator> gens_;
  std::vector<std::vector<std::size_t>> direct_;  // per level: global ids of its direct generators
  std::vector<std::vector<Flat>> flat_;           // per level, per row in insertion order
};

template <class Field>
GradedSubspace<Field> right_ideal_piece(const AlgebraContext& ctx, const RightIdealSpec& spec, int d,
                                        const Field& field) {
  RightIdealLadder<Field> ladder(ctx, spec, field);
  return ladder.piece(d);
}

SubspaceBasis right_ideal_piece(const AlgebraContext& ctx, const RightIdealSpec& spec, int d);

/// Exact membership of a homogeneous target in the right ideal, with witness.
MembershipResult right_ideal_membership(const AlgebraContext& ctx, const RightIdealSpec& spec, const AlgElem& target);

// ---------------------------------------------------------------------------
// Hilbert function of A#C_n/(e_0).

struct HilbertProfile {
  int n = 0;
  /// H(0..) as computed; stops at the first zero.
  std::vector<uint64_t> dims;
  std::optional<int> certified_zero_from;
  /// H(d*+1) was computed and is zero.
  bool zero_propagation_checked = false;
  /// Set when computed over F_p: each value is then an upper bound on the
  /// rational one, and a zero is still a certificate.
  std::optional<uint64_t> prime;
};

/// n * C(n+d-1, d).
uint64_t smash_piece_dim(int n, int d);

template <class Field>
HilbertProfile hilbert_quotient(const AlgebraContext& ctx, int max_degree, const Field& field) {
  HilbertProfile profile;
  profile.n = ctx.n();
  if constexpr (!Field::kExact) profile.prime = field.modulus();
  for (int d = 0; d <= max_degree; ++d) {
    const auto sub = ideal_piece_e0(ctx, d, field);
    const uint64_t h = smash_piece_dim(ctx.n(), d) - sub.rank();
    profile.dims.push_back(h);
    if (h == 0) {
      profile.certified_zero_from = d;
      const auto next = ideal_piece_e0(ctx, d + 1, field);
      profile.zero_propagation_checked = next.rank() == smash_piece_dim(ctx.n(), d + 1);
      break;
    }
  }
  return profile;
}

HilbertProfile hilbert_quotient(const AlgebraContext& ctx, int max_degree);

// ---------------------------------------------------------------------------
// Modular screening.

/// The default screening prime: smallest p > 2^20 with p = 1 (mod n); the
/// k-th default is the k-th such prime.
uint64_t default_prime(int n, int which = 0);

struct ScreenVerdict {
  uint64_t prime = 0;
  /// false is a proof of non-membership over Q(w); true still needs an
  /// exact confirmation.
  bool contained_mod_p = false;
};

ScreenVerdict screen_ideal_e0_membership(const AlgebraContext& ctx, const SmashElem& target, uint64_t prime);
ScreenVerdict screen_right_ideal_membership(const AlgebraContext& ctx, const RightIdealSpec& spec,
                                            const AlgElem& target, uint64_t prime);
/// Rank of the span over F_p: a lower bound on the rank over Q(w).
std::size_t screen_rank(const AlgebraContext& ctx, int degree, const std::vector<AlgElem>& vectors, uint64_t prime);
HilbertProfile screen_hilbert_quotient(const AlgebraContext& ctx, int max_degree, uint64_t prime);

// ---------------------------------------------------------------------------
// Template definitions.

template <class Field>
SparseRow<typename Field::Element> PieceIndex::to_row(const AlgElem& u, const Field& f) const {
  check_degree(u.homogeneous_degree(), u.is_zero());
  if (desc_.smash) return to_row(SmashElem::embed(u), f);
  SparseRow<typename Field::Element> row;
  row.reserve(u.size());
  for (const auto& [m, c] : u.terms()) {
    auto v = f.from_cyc(c);
    if (!f.is_zero(v)) row.push_back({column(m), std::move(v)});
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  return row;
}

template <class Field>
SparseRow<typename Field::Element> PieceIndex::to_row(const SmashElem& u, const Field& f) const {
  check_degree(u.homogeneous_degree(), u.is_zero());
  if (!desc_.smash) return to_row(u.to_plain(), f);
  SparseRow<typename Field::Element> row;
  row.reserve(u.size());
  for (const auto& [k, c] : u.terms()) {
    auto v = f.from_cyc(c);
    if (!f.is_zero(v)) row.push_back({column(k.mono, k.power), std::move(v)});
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  return row;
}

template <class Field>
SparseRow<typename Field::Element> e0_generator_row(const AlgebraContext& ctx, const PieceIndex& index,
                                                     const IdealGenerator& g, const Field& f) {
  const int n = ctx.n();
  const auto inv_n = f.from_cyc(ctx.scalar(Rational(1, n)));
  SparseRow<typename Field::Element> row;
  row.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Monomial shifted = g.right.shifted(i);
    const int sign = sigma_sign(g.right, i) * mono_mul_sign(g.left, shifted);
    row.push_back({index.column(g.left.times(shifted), (i + g.power) % n), sign > 0 ? inv_n : f.neg(inv_n)});
  }
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
  return row;
}

template <class Field>
RightIdealLadder<Field>::RightIdealLadder(const AlgebraContext& ctx, RightIdealSpec spec, const Field& field,
                                          bool track)
    : ctx_(ctx), spec_(std::move(spec)), field_(field), track_(track) {
  for (std::size_t i = 0; i < spec_.explicit_generators.size(); ++i)
    if (!spec_.explicit_generators[i].is_homogeneous())
      throw InvalidInput("right ideal generator " + std::to_string(i) + " is not homogeneous");
  levels_.emplace_back(ctx_, 0, false, field_, track_);
  direct_.emplace_back();
  flat_.emplace_back();
}

template <class Field>
const GradedSubspace<Field>& RightIdealLadder<Field>::piece(int d) {
  if (d < 0) throw InvalidInput("graded piece of negative degree");
  while (static_cast<int>(levels_.size()) <= d) extend();
  return levels_[d];
}

template <class Field>
void RightIdealLadder<Field>::extend() {
  const int d = static_cast<int>(levels_.size());
  const int n = ctx_.n();
  GradedSubspace<Field> sub(ctx_, d, false, field_, track_);
  std::vector<std::size_t> direct;
  auto add_direct = [&](AlgElem g, std::string label) {
    direct.push_back(gens_.size());
    gens_.push_back({std::move(g), std::move(label)});
  };
  if (spec_.gamma) {
    const std::string label = "R" + std::to_string(mod_index(*spec_.gamma, n));
    for (const Monomial& m : monomials_of_degree(n, d)) {
      AlgElem p = eigen_projection(AlgElem::monomial(ctx_, m), *spec_.gamma);
      if (!p.is_zero()) add_direct(std::move(p), label);
    }
  }
  if (d == 2)
    for (int k : spec_.central) add_direct(c_element(ctx_, k), "c" + std::to_string(mod_index(k, n)));
  for (std::size_t i = 0; i < spec_.explicit_generators.size(); ++i) {
    const auto& g = spec_.explicit_generators[i];
    if (!g.is_zero() && *g.homogeneous_degree() == d) add_direct(g, "g" + std::to_string(i));
  }

  std::vector<SparseRow<Scalar>> rows;
  rows.reserve(direct.size());
  for (std::size_t id : direct) rows.push_back(sub.index().to_row(gens_[id].element, field_));
  // previous rows times x_t; local id = direct.size() + r * n + t
  const auto& prev = levels_[d - 1];
  const auto& prev_rows = prev.echelon().rows();
  const std::size_t base = rows.size();
  rows.resize(base + prev_rows.size() * n);
#pragma omp parallel for schedule(static)
  for (std::size_t r = 0; r < prev_rows.size(); ++r) {
    for (int t = 0; t < n; ++t) {
      const Monomial xt = Monomial::generator(n, t);
      SparseRow<Scalar> out;
      out.reserve(prev_rows[r].size());
      for (const auto& e : prev_rows[r]) {
        const Monomial& m = prev.index().key(e.col).mono;
        out.push_back({sub.index().column(m.times(xt)), mono_mul_sign(m, xt) > 0 ? e.val : field_.neg(e.val)});
      }
      std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.col < b.col; });
      rows[base + r * n + t] = std::move(out);
    }
  }
  sub.echelon().insert_all(rows);

  levels_.push_back(std::move(sub));
  direct_.push_back(std::move(direct));
  flat_.emplace_back();
  if (track_) {
    const auto& ech = levels_[d].echelon();
    for (std::size_t r = 0; r < ech.rank(); ++r) flat_[d].push_back(flatten_map(d, ech.combination(r)));
  }
}

template <class Field>
typename RightIdealLadder<Field>::Flat RightIdealLadder<Field>::flatten_map(
    int d, const typename Echelon<Field>::Combination& combo) const {
  const int n = ctx_.n();
  const auto& direct = direct_[d];
  Flat out;
  auto accumulate = [&](std::size_t g, const Monomial& m, const Scalar& c) {
    auto [it, inserted] = out.try_emplace({g, m}, field_.zero());
    field_.add_to(it->second, c);
  };
  for (const auto& e : combo) {
    if (e.col < direct.size()) {
      accumulate(direct[e.col], Monomial(n), e.val);
      continue;
    }
    const std::size_t r = (e.col - direct.size()) / n;
    const Monomial xt = Monomial::generator(n, static_cast<int>((e.col - direct.size()) % n));
    for (const auto& [key, c] : flat_[d - 1][r]) {
      const Scalar v = field_.mul(e.val, c);
      accumulate(key.first, key.second.times(xt), mono_mul_sign(key.second, xt) > 0 ? v : field_.neg(v));
    }
  }
  for (auto it = out.begin(); it != out.end();) it = field_.is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

template <class Field>
std::vector<typename RightIdealLadder<Field>::FlatTerm> RightIdealLadder<Field>::flatten(
    int d, const typename Echelon<Field>::Combination& combo) const {
  std::vector<FlatTerm> out;
  for (auto& [key, c] : flatten_map(d, combo)) out.push_back({key.first, key.second, c});
  return out;
}

template <class Field>
std::optional<std::vector<typename RightIdealLadder<Field>::FlatTerm>> RightIdealLadder<Field>::express(
    const AlgElem& target) {
  if (!track_) throw std::logic_error("RightIdealLadder::express needs tracking");
  if (target.is_zero()) return std::vector<FlatTerm>{};
  const auto d = target.homogeneous_degree();
  if (!d) throw InvalidInput("membership target is not homogeneous");
  const auto& sub = piece(*d);
  const auto combo = sub.echelon().express(sub.index().to_row(target, field_));
  if (!combo) return std::nullopt;
  return flatten(*d, *combo);
}

}  // namespace skewlab

#endif  // SKEWLAB_GRADED_LINALG_HPP
