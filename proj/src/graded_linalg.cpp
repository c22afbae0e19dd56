#include "skewlab/graded_linalg.hpp"

#include <algorithm>

namespace skewlab {

std::size_t PieceDescriptor::dim() const {
  const uint64_t m = monomial_count(n, degree);
  return static_cast<std::size_t>(smash ? m * static_cast<uint64_t>(n) : m);
}

PieceIndex::PieceIndex(int n, int degree, bool smash) : desc_{n, degree, smash} {
  if (degree < 0) throw InvalidInput("graded piece of negative degree");
  monomials_ = monomials_of_degree(n, degree);
}

uint32_t PieceIndex::column(const Monomial& m, int power) const {
  const auto r = static_cast<uint32_t>(monomial_rank(m));
  return desc_.smash ? r * static_cast<uint32_t>(desc_.n) + static_cast<uint32_t>(power) : r;
}

SmashKey PieceIndex::key(uint32_t col) const {
  if (!desc_.smash) return SmashKey{monomials_.at(col), 0};
  return SmashKey{monomials_.at(col / desc_.n), static_cast<int>(col % desc_.n)};
}

void PieceIndex::check_degree(std::optional<int> d, bool is_zero) const {
  if (is_zero) return;
  if (!d) throw InvalidInput("element is not homogeneous");
  if (*d != desc_.degree)
    throw InvalidInput("element of degree " + std::to_string(*d) + " does not lie in the degree " +
                       std::to_string(desc_.degree) + " piece");
}

AlgElem PieceIndex::to_plain(const AlgebraContext& ctx, const SparseRow<CycNumber>& row) const {
  return to_smash(ctx, row).to_plain();
}

SmashElem PieceIndex::to_smash(const AlgebraContext& ctx, const SparseRow<CycNumber>& row) const {
  std::vector<SmashTerm> terms;
  terms.reserve(row.size());
  for (const auto& e : row) terms.push_back({key(e.col), e.val});
  return SmashElem(ctx, std::move(terms));
}

std::vector<AlgElem> basis_elements(const SubspaceBasis& sub) {
  std::vector<AlgElem> out;
  for (const auto& row : sub.echelon().rows_by_pivot()) out.push_back(sub.index().to_plain(sub.context(), row));
  return out;
}

std::vector<SmashElem> basis_smash_elements(const SubspaceBasis& sub) {
  std::vector<SmashElem> out;
  for (const auto& row : sub.echelon().rows_by_pivot()) out.push_back(sub.index().to_smash(sub.context(), row));
  return out;
}

SmashElem MembershipWitness::recombine() const {
  SmashElem acc(target.context());
  for (const auto& t : terms) acc += smash_mul(smash_mul(t.left, t.generator), t.right) * t.coefficient;
  return acc;
}

SubspaceBasis span(const AlgebraContext& ctx, int degree, const std::vector<AlgElem>& vectors) {
  SubspaceBasis sub(ctx, degree, false, CyclotomicField(ctx.cyc()));
  for (const auto& v : vectors) sub.add(v);
  return sub;
}

SubspaceBasis span_smash(const AlgebraContext& ctx, int degree, const std::vector<SmashElem>& vectors) {
  SubspaceBasis sub(ctx, degree, true, CyclotomicField(ctx.cyc()));
  for (const auto& v : vectors) sub.add(v);
  return sub;
}

MembershipResult contains(const AlgebraContext& ctx, const std::vector<AlgElem>& generators, const AlgElem& v) {
  MembershipResult result;
  const SmashElem target = SmashElem::embed(v);
  if (v.is_zero()) {
    result.contained = true;
    result.witness = MembershipWitness{target, {}};
    return result;
  }
  const auto d = v.homogeneous_degree();
  if (!d) throw InvalidInput("membership target is not homogeneous");
  // other degrees cannot contribute to a homogeneous target
  SubspaceBasis sub(ctx, *d, false, CyclotomicField(ctx.cyc()), true);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (!g.is_homogeneous()) throw InvalidInput("generator " + std::to_string(i) + " is not homogeneous");
    if (g.is_zero() || *g.homogeneous_degree() != *d) continue;
    sub.add(g, i);
  }
  const auto combo = sub.echelon().express(sub.index().to_row(v, sub.field()));
  if (!combo) return result;
  result.contained = true;
  MembershipWitness w{target, {}};
  const SmashElem one = SmashElem::group(ctx, 0);
  for (const auto& e : *combo)
    w.terms.push_back({e.val, one, SmashElem::embed(generators[e.col]), one, "v" + std::to_string(e.col)});
  result.witness = std::move(w);
  return result;
}

SubspaceBasis r_gamma_basis(const AlgebraContext& ctx, long gamma, int d) {
  SubspaceBasis sub(ctx, d, false, CyclotomicField(ctx.cyc()));
  for (const Monomial& m : monomials_of_degree(ctx.n(), d)) {
    if (sub.echelon().full()) break;
    const AlgElem p = eigen_projection(AlgElem::monomial(ctx, m), gamma);
    if (!p.is_zero()) sub.add(p);
  }
  return sub;
}

std::vector<IdealGenerator> e0_generators(int n, int d) {
  std::vector<IdealGenerator> out;
  for (int k = 0; k <= d; ++k) {
    const auto lefts = monomials_of_degree(n, k);
    const auto rights = monomials_of_degree(n, d - k);
    for (const auto& a : lefts)
      for (const auto& b : rights)
        for (int j = 0; j < n; ++j) out.push_back({a, b, j});
  }
  return out;
}

SmashElem e0_generator_element(const AlgebraContext& ctx, const IdealGenerator& g) {
  return smash_mul(smash_mul(SmashElem::basis(ctx, g.left, 0), e_element(ctx, 0)),
                   SmashElem::basis(ctx, g.right, g.power));
}

SubspaceBasis ideal_piece_e0(const AlgebraContext& ctx, int d) {
  return ideal_piece_e0(ctx, d, CyclotomicField(ctx.cyc()));
}

MembershipResult ideal_e0_membership(const AlgebraContext& ctx, const SmashElem& target) {
  MembershipResult result;
  if (target.is_zero()) {
    result.contained = true;
    result.witness = MembershipWitness{target, {}};
    return result;
  }
  const auto d = target.homogeneous_degree();
  if (!d) throw InvalidInput("membership target is not homogeneous");
  const CyclotomicField field(ctx.cyc());
  if (!ideal_piece_e0(ctx, *d, field).contains(target)) return result;
  const auto sub = ideal_piece_e0(ctx, *d, field, true);
  const auto combo = sub.echelon().express(sub.index().to_row(target, field));
  if (!combo) return result;
  const auto gens = e0_generators(ctx.n(), *d);
  const SmashElem e0 = e_element(ctx, 0);
  MembershipWitness w{target, {}};
  for (const auto& e : *combo) {
    const auto& g = gens[e.col];
    w.terms.push_back({e.val, SmashElem::basis(ctx, g.left, 0), e0, SmashElem::basis(ctx, g.right, g.power), "e0"});
  }
  result.contained = true;
  result.witness = std::move(w);
  return result;
}

SubspaceBasis right_ideal_piece(const AlgebraContext& ctx, const RightIdealSpec& spec, int d) {
  return right_ideal_piece(ctx, spec, d, CyclotomicField(ctx.cyc()));
}

MembershipResult right_ideal_membership(const AlgebraContext& ctx, const RightIdealSpec& spec, const AlgElem& target) {
  RightIdealLadder<CyclotomicField> ladder(ctx, spec, CyclotomicField(ctx.cyc()), true);
  MembershipResult result;
  const auto flat = ladder.express(target);
  if (!flat) return result;
  const SmashElem one = SmashElem::group(ctx, 0);
  MembershipWitness w{SmashElem::embed(target), {}};
  for (const auto& t : *flat) {
    const auto& g = ladder.generators()[t.generator];
    w.terms.push_back({t.coefficient, one, SmashElem::embed(g.element), SmashElem::basis(ctx, t.right, 0), g.label});
  }
  result.contained = true;
  result.witness = std::move(w);
  return result;
}

uint64_t smash_piece_dim(int n, int d) { return monomial_count(n, d) * static_cast<uint64_t>(n); }

HilbertProfile hilbert_quotient(const AlgebraContext& ctx, int max_degree) {
  return hilbert_quotient(ctx, max_degree, CyclotomicField(ctx.cyc()));
}

uint64_t default_prime(int n, int which) {
  uint64_t p = kDefaultPrimeFloor;
  for (int i = 0; i <= which; ++i) p = next_prime_one_mod(n, p);
  return p;
}

ScreenVerdict screen_ideal_e0_membership(const AlgebraContext& ctx, const SmashElem& target, uint64_t prime) {
  const PrimeField f(prime, ctx.n());
  ScreenVerdict v{prime, true};
  if (target.is_zero()) return v;
  const auto d = target.homogeneous_degree();
  if (!d) throw InvalidInput("membership target is not homogeneous");
  const auto sub = ideal_piece_e0(ctx, *d, f);
  v.contained_mod_p = sub.contains(target);
  return v;
}

ScreenVerdict screen_right_ideal_membership(const AlgebraContext& ctx, const RightIdealSpec& spec,
                                            const AlgElem& target, uint64_t prime) {
  const PrimeField f(prime, ctx.n());
  ScreenVerdict v{prime, true};
  if (target.is_zero()) return v;
  const auto d = target.homogeneous_degree();
  if (!d) throw InvalidInput("membership target is not homogeneous");
  const auto sub = right_ideal_piece(ctx, spec, *d, f);
  v.contained_mod_p = sub.contains(target);
  return v;
}

std::size_t screen_rank(const AlgebraContext& ctx, int degree, const std::vector<AlgElem>& vectors, uint64_t prime) {
  const PrimeField f(prime, ctx.n());
  GradedSubspace<PrimeField> sub(ctx, degree, false, f);
  for (const auto& v : vectors) sub.add(v);
  return sub.rank();
}

HilbertProfile screen_hilbert_quotient(const AlgebraContext& ctx, int max_degree, uint64_t prime) {
  return hilbert_quotient(ctx, max_degree, PrimeField(prime, ctx.n()));
}

}  // namespace skewlab
