#include "skewlab/certify.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>

namespace skewlab {

namespace {

std::string cname(long k, int n) { return "c" + std::to_string(mod_index(k, n)); }
std::string bname(long k, int n) { return "b" + std::to_string(mod_index(k, n)); }

std::string pow_text(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^" + std::to_string(e);
}

void require_valid(const MembershipWitness& w, const std::string& what) {
  if (!w.valid()) throw Inconsistency("witness for " + what + " does not recombine to its target");
}

/// Runs `body(i)` for i in [0, count) across threads and rethrows the first
/// exception afterwards.
template <class Body>
void parallel_indices(std::size_t count, Body body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(skewlab_certify_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

/// Membership in one right ideal across many targets: an untracked exact
/// ladder decides, an optional F_p ladder rejects early, and a tracked
/// ladder is only built once something is found.
class RightIdealSearch {
 public:
  RightIdealSearch(const AlgebraContext& ctx, RightIdealSpec spec, bool screen)
      : ctx_(ctx), spec_(std::move(spec)), exact_(ctx_, spec_, CyclotomicField(ctx_.cyc())) {
    if (screen) screen_.emplace(ctx_, spec_, PrimeField(default_prime(ctx_.n()), ctx_.n()));
  }

  std::optional<MembershipWitness> find(const AlgElem& target, const std::string& what) {
    MembershipWitness w{SmashElem::embed(target), {}};
    if (target.is_zero()) return w;
    const int d = *target.homogeneous_degree();
    if (screen_ && !screen_->piece(d).contains(target)) return std::nullopt;
    if (!exact_.piece(d).contains(target)) return std::nullopt;
    if (!tracked_) tracked_.emplace(ctx_, spec_, CyclotomicField(ctx_.cyc()), true);
    const auto flat = tracked_->express(target);
    if (!flat) throw Inconsistency("tracked and untracked right-ideal pieces disagree on " + what);
    const SmashElem one = SmashElem::group(ctx_, 0);
    for (const auto& t : *flat) {
      const auto& g = tracked_->generators()[t.generator];
      w.terms.push_back({t.coefficient, one, SmashElem::embed(g.element), SmashElem::basis(ctx_, t.right, 0), g.label});
    }
    require_valid(w, what);
    return w;
  }

 private:
  AlgebraContext ctx_;
  RightIdealSpec spec_;
  RightIdealLadder<CyclotomicField> exact_;
  std::optional<RightIdealLadder<PrimeField>> screen_;
  std::optional<RightIdealLadder<CyclotomicField>> tracked_;
};

/// (e_0) membership, exact, with an optional F_p rejection first.
std::optional<MembershipWitness> find_in_e0(const AlgebraContext& ctx, const SmashElem& target, bool screen,
                                            const std::string& what) {
  if (screen && !screen_ideal_e0_membership(ctx, target, default_prime(ctx.n())).contained_mod_p)
    return std::nullopt;
  auto r = ideal_e0_membership(ctx, target);
  if (!r.contained) return std::nullopt;
  require_valid(*r.witness, what);
  return std::move(r.witness);
}

std::vector<SearchStatus> checked_quotient(const std::vector<SearchStatus>& set, const char* role) {
  for (const auto& s : set) {
    if (!s.found || !s.witness)
      throw InvalidInput(std::string(role) + " index " + std::to_string(s.index) + " has no certificate");
    require_valid(*s.witness, std::string(role) + " index " + std::to_string(s.index));
  }
  return set;
}

std::vector<int> indices_of(const std::vector<SearchStatus>& set, int n) {
  std::vector<int> out;
  for (const auto& s : set) out.push_back(static_cast<int>(mod_index(s.index, n)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SearchStatus psi_search(RightIdealSearch& search, const AlgebraContext& ctx, long i, const SearchBounds& bounds) {
  const int n = ctx.n();
  SearchStatus st;
  st.index = mod_index(i, n);
  st.target = cname(i, n) + "^N";
  st.max_degree = bounds.max_degree;
  const AlgElem c = c_element(ctx, i);
  AlgElem cp = AlgElem::one(ctx);
  const int top = std::min(bounds.max_power, bounds.max_degree / 2);
  for (int N = 1; N <= top; ++N) {
    cp = mul(cp, c);
    st.searched_exponent = N;
    auto w = search.find(cp, pow_text(cname(i, n), N));
    if (!w) continue;
    st.found = true;
    st.exponent = N;
    // a right ideal is closed under right multiplication by c_i
    MembershipWitness next = *w;
    next.target = SmashElem::embed(mul(cp, c));
    for (auto& t : next.terms) t.right = smash_mul(t.right, SmashElem::embed(c));
    st.monotone_checked = next.valid();
    if (!st.monotone_checked) throw Inconsistency("monotonicity failed for " + pow_text(cname(i, n), N));
    st.witness = std::move(w);
    break;
  }
  return st;
}

SearchStatus saturate(RightIdealSearch& search, const AlgebraContext& ctx, long m, const AlgElem& x, int max_t,
                      const std::string& label) {
  const int n = ctx.n();
  SearchStatus st;
  st.index = mod_index(m, n);
  st.target = cname(m, n) + "^t*(" + label + ")";
  const AlgElem cm = c_element(ctx, m);
  AlgElem target = x;
  const int dx = x.homogeneous_degree().value_or(0);
  st.max_degree = dx + 2 * max_t;
  for (int t = 0; t <= max_t; ++t) {
    if (t > 0) target = mul(cm, target);
    st.searched_exponent = t;
    auto w = search.find(target, pow_text(cname(m, n), t) + "*(" + label + ")");
    if (!w) continue;
    st.found = true;
    st.exponent = t;
    st.witness = std::move(w);
    break;
  }
  return st;
}

}  // namespace

std::vector<int> PhiReport::found_set() const {
  std::vector<int> out;
  for (const auto& e : entries)
    if (e.found) out.push_back(static_cast<int>(e.index));
  std::sort(out.begin(), out.end());
  return out;
}

SearchStatus phi_membership(const AlgebraContext& ctx, long k, const SearchBounds& bounds) {
  if (bounds.max_power < 1 || bounds.max_degree < 1) throw InvalidInput("search bounds must be at least 1");
  const int n = ctx.n();
  SearchStatus st;
  st.index = mod_index(k, n);
  st.target = cname(k, n) + "^N";
  st.max_degree = bounds.max_degree;
  const AlgElem c = c_element(ctx, k);
  AlgElem cp = AlgElem::one(ctx);
  const int top = std::min(bounds.max_power, bounds.max_degree / 2);
  for (int N = 1; N <= top; ++N) {
    cp = mul(cp, c);
    st.searched_exponent = N;
    auto w = find_in_e0(ctx, SmashElem::embed(cp), bounds.modular_screen, pow_text(cname(k, n), N));
    if (!w) continue;
    st.found = true;
    st.exponent = N;
    // (e_0) is a two-sided ideal, so the witness times c_k certifies N+1
    MembershipWitness next = *w;
    next.target = SmashElem::embed(mul(cp, c));
    for (auto& t : next.terms) t.right = smash_mul(t.right, SmashElem::embed(c));
    st.monotone_checked = next.valid();
    if (!st.monotone_checked) throw Inconsistency("monotonicity failed for " + pow_text(cname(k, n), N));
    st.witness = std::move(w);
    break;
  }
  return st;
}

PhiReport phi_report(const AlgebraContext& ctx, std::vector<int> ks, const SearchBounds& bounds) {
  const int n = ctx.n();
  if (ks.empty()) {
    ks.resize(n);
    std::iota(ks.begin(), ks.end(), 0);
  }
  for (int& k : ks) k = static_cast<int>(mod_index(k, n));
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  PhiReport report;
  report.n = n;
  report.entries.resize(ks.size());
  parallel_indices(ks.size(), [&](std::size_t i) { report.entries[i] = phi_membership(ctx, ks[i], bounds); });
  if (static_cast<int>(ks.size()) == n) {
    report.special_subset_checked = true;
    report.special_subset_holds = special_subset_check(n, report.found_set());
  }
  return report;
}

std::vector<int> phi2_set(int n) {
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    const int g = std::gcd(k, n);
    if ((g & (g - 1)) == 0) out.push_back(k);
  }
  return out;
}

bool special_subset_check(int n, const std::vector<int>& found) {
  std::set<int> s;
  for (int k : found) s.insert(static_cast<int>(mod_index(k, n)));
  for (int k : s)
    for (int u = 1; u < n; ++u)
      if (std::gcd(u, n) == 1 && !s.count(static_cast<int>((static_cast<long>(u) * k) % n))) return false;
  return true;
}

SearchStatus psi_membership(const AlgebraContext& ctx, long i, long j, const std::vector<SearchStatus>& quotient_by,
                            const SearchBounds& bounds) {
  if (bounds.max_power < 1 || bounds.max_degree < 1) throw InvalidInput("search bounds must be at least 1");
  checked_quotient(quotient_by, "quotient");
  RightIdealSearch search(ctx, RightIdealSpec{j, indices_of(quotient_by, ctx.n()), {}}, bounds.modular_screen);
  return psi_search(search, ctx, i, bounds);
}

PsiReport psi_report(const AlgebraContext& ctx, long j, const std::vector<SearchStatus>& quotient_by,
                     const SearchBounds& bounds) {
  if (bounds.max_power < 1 || bounds.max_degree < 1) throw InvalidInput("search bounds must be at least 1");
  checked_quotient(quotient_by, "quotient");
  const int n = ctx.n();
  PsiReport report;
  report.n = n;
  report.j = mod_index(j, n);
  report.quotient_by = indices_of(quotient_by, n);
  RightIdealSearch search(ctx, RightIdealSpec{j, report.quotient_by, {}}, bounds.modular_screen);
  for (int i = 0; i < n; ++i) report.entries.push_back(psi_search(search, ctx, i, bounds));
  return report;
}

GrowthEvidence growth_evidence(const std::vector<uint64_t>& dims) {
  GrowthEvidence g;
  if (dims.empty()) return g;
  g.all_positive = std::all_of(dims.begin(), dims.end(), [](uint64_t h) { return h > 0; });
  g.nondecreasing = std::is_sorted(dims.begin(), dims.end());
  // fit on the second half so that low-degree irregularities do not count
  std::vector<long double> tail(dims.begin() + static_cast<long>(dims.size() / 2), dims.end());
  for (int k = 0; k + 2 <= static_cast<int>(tail.size()); ++k) {
    std::vector<long double> diff = tail;
    for (int r = 0; r <= k; ++r) {
      for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
      diff.pop_back();
    }
    if (std::all_of(diff.begin(), diff.end(), [](long double x) { return x == 0; })) {
      g.fitted_degree = k;
      break;
    }
  }
  if (g.fitted_degree >= 0) g.gk_estimate = g.all_positive ? g.fitted_degree + 1 : 0;
  return g;
}

namespace {

HilbertProfile cross_checked_hilbert(const AlgebraContext& ctx, int max_degree) {
  HilbertProfile exact = hilbert_quotient(ctx, max_degree);
  const HilbertProfile modular = screen_hilbert_quotient(ctx, max_degree, default_prime(ctx.n()));
  if (modular.dims != exact.dims || modular.certified_zero_from != exact.certified_zero_from)
    throw Inconsistency("Hilbert function over F_" + std::to_string(*modular.prime) +
                        " differs from the exact one");
  if (exact.certified_zero_from && !exact.zero_propagation_checked)
    throw Inconsistency("H(d*) = 0 but H(d*+1) is not zero");
  return exact;
}

}  // namespace

PertinencyReport pertinency_report(const AlgebraContext& ctx, int max_degree) {
  if (max_degree < 0) throw InvalidInput("max degree must be non-negative");
  PertinencyReport r;
  r.n = ctx.n();
  r.hilbert = cross_checked_hilbert(ctx, max_degree);
  r.equals_n = r.hilbert.certified_zero_from.has_value() && r.hilbert.zero_propagation_checked;
  r.growth = growth_evidence(r.hilbert.dims);
  return r;
}

AdmissibilityReport admissibility_report(const AlgebraContext& ctx, const SearchBounds& bounds, bool run_psi) {
  AdmissibilityReport r;
  r.n = ctx.n();
  r.hilbert = cross_checked_hilbert(ctx, bounds.max_degree);
  r.admissible = r.hilbert.certified_zero_from.has_value();
  if (run_psi) {
    r.psi.resize(ctx.n());
    parallel_indices(r.psi.size(), [&](std::size_t j) { r.psi[j] = psi_report(ctx, static_cast<long>(j), {}, bounds); });
  }
  return r;
}

SearchStatus gamma_saturated_membership(const AlgebraContext& ctx, long m, const AlgElem& x,
                                        const std::vector<SearchStatus>& saturating, int max_t) {
  if (!x.is_homogeneous()) throw InvalidInput("saturation target is not homogeneous");
  if (max_t < 0) max_t = 2 * ctx.n();
  checked_quotient(saturating, "saturating");
  RightIdealSearch search(ctx, RightIdealSpec{1, indices_of(saturating, ctx.n()), {}}, false);
  return saturate(search, ctx, m, x, max_t, x.to_string());
}

// ---------------------------------------------------------------------------
// Claims.

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

ClaimResult make_claim(std::string statement, AlgElem lhs, AlgElem rhs) {
  AlgElem residual = lhs - rhs;
  const bool holds = residual.is_zero();
  return ClaimResult{std::move(statement), holds, std::move(lhs), std::move(rhs), std::move(residual)};
}

}  // namespace

ClaimResult verify_claim1(const AlgebraContext& ctx, int m, int j, int s) {
  const int n = ctx.n();
  require(m >= 1 && m < n, "claim 1 needs 1 <= m < n");
  require(j >= 0 && 2 * j < m - 1, "claim 1 needs 0 <= j < (m-1)/2");
  require(s > 0, "claim 1 needs s > 0");
  const AlgElem cm = c_element(ctx, m);
  const AlgElem cms = power(cm, s);
  const AlgElem lhs = graded_commutator(mul(b_element(ctx, j + 1), b_element(ctx, m - j)), mul(cms, b_element(ctx, j)));
  const AlgElem rhs =
      mul(mul(cms, cm), b_element(ctx, j + 1)) - mul(mul(cms, c_element(ctx, 2 * j + 1)), b_element(ctx, m - j));
  const std::string cs = pow_text(cname(m, n), s);
  return make_claim("[" + bname(j + 1, n) + "*" + bname(m - j, n) + ", " + cs + "*" + bname(j, n) + "] = " +
                        pow_text(cname(m, n), s + 1) + "*" + bname(j + 1, n) + " - " + cs + "*" +
                        cname(2 * j + 1, n) + "*" + bname(m - j, n),
                    lhs, rhs);
}

std::pair<ClaimResult, ClaimResult> verify_claim2(const AlgebraContext& ctx, int m, int k, int s) {
  const int n = ctx.n();
  require(k >= 1 && m == 2 * k + 1, "claim 2 needs m = 2k+1 with k >= 1");
  require(s > 0, "claim 2 needs s > 0");
  auto b = [&](long i) { return b_element(ctx, i); };
  auto c = [&](long i) { return c_element(ctx, i); };
  const AlgElem cm = c(m);
  const AlgElem cms = power(cm, s);
  const AlgElem cms1 = mul(cms, cm);
  const AlgElem cms2 = mul(cms1, cm);
  const std::string Cs = pow_text(cname(m, n), s);
  const std::string Cs1 = pow_text(cname(m, n), s + 1);
  const std::string Cs2 = pow_text(cname(m, n), s + 2);
  const std::string B1 = bname(k + 1, n), B2 = bname(k + 2, n), Bm = bname(m - 1, n);

  // first display
  const AlgElem lhs1 = graded_commutator(mul(cms, b(k)), mul(mul(b(k + 1), b(k + 2)), b(m - 1)));
  const AlgElem rhs1 = mul(cms1, mul(b(k + 2), b(m - 1))) + mul(mul(cms, c(3 * k)), mul(b(k + 1), b(k + 2))) -
                       mul(mul(cms, c(m + 1)), mul(b(k + 1), b(m - 1)));
  ClaimResult first = make_claim("[" + Cs + "*" + bname(k, n) + ", " + B1 + "*" + B2 + "*" + Bm + "] = " + Cs1 +
                                     "*" + B2 + "*" + Bm + " + " + Cs + "*" + cname(3 * k, n) + "*" + B1 + "*" + B2 +
                                     " - " + Cs + "*" + cname(m + 1, n) + "*" + B1 + "*" + Bm,
                                 lhs1, rhs1);

  // second display
  const AlgElem u = mul(cms1, mul(b(k + 2), b(m - 1))) + mul(mul(cms, c(3 * k)), mul(b(k + 1), b(k + 2)));
  const AlgElem lhs2 = graded_commutator(u, b(1));
  const AlgElem rhs2 = mul(cms2, b(k + 2)) - mul(mul(cms1, c(k + 3)), b(m - 1)) +
                       mul(mul(mul(cms, c(3 * k)), c(k + 3)), b(k + 1)) -
                       mul(mul(mul(cms, c(3 * k)), c(k + 2)), b(k + 2));
  ClaimResult second = make_claim("[" + Cs1 + "*" + B2 + "*" + Bm + " + " + Cs + "*" + cname(3 * k, n) + "*" + B1 +
                                      "*" + B2 + ", " + bname(1, n) + "] = " + Cs2 + "*" + B2 + " - " + Cs1 + "*" +
                                      cname(k + 3, n) + "*" + Bm + " + " + Cs + "*" + cname(3 * k, n) + "*" +
                                      cname(k + 3, n) + "*" + B1 + " - " + Cs + "*" + cname(3 * k, n) + "*" +
                                      cname(k + 2, n) + "*" + B2,
                                  lhs2, rhs2);
  return {std::move(first), std::move(second)};
}

ClaimResult verify_claim3_even(const AlgebraContext& ctx, int m) {
  const int n = ctx.n();
  require(m >= 2 && m % 2 == 0, "the even case of claim 3 needs an even m >= 2");
  require(m < n, "claim 3 needs m < n");
  const AlgElem cm = c_element(ctx, m);
  const AlgElem u = mul(power(cm, m / 2 - 1), b_element(ctx, m / 2));
  const AlgElem lhs = power(cm, m - 1);
  const AlgElem rhs = graded_commutator(u, u);
  const std::string uu = pow_text(cname(m, n), m / 2 - 1) + "*" + bname(m / 2, n);
  return make_claim(pow_text(cname(m, n), m - 1) + " = [" + uu + ", " + uu + "]", lhs, rhs);
}

ClaimResult verify_claim3_odd(const AlgebraContext& ctx, int m) {
  const int n = ctx.n();
  require(m % 2 == 1, "the odd case of claim 3 needs an odd m");
  const int k = (m - 1) / 2;
  require(k > 2, "the odd case of claim 3 needs m = 2k+1 with k > 2");
  require(m < n, "claim 3 needs m < n");
  const AlgElem cm = c_element(ctx, m);
  const AlgElem lhs = power(cm, 2 * k);
  const AlgElem rhs =
      graded_commutator(mul(power(cm, k - 2), b_element(ctx, k - 1)), mul(power(cm, k + 1), b_element(ctx, k + 2)));
  return make_claim(pow_text(cname(m, n), 2 * k) + " = [" + pow_text(cname(m, n), k - 2) + "*" + bname(k - 1, n) +
                        ", " + pow_text(cname(m, n), k + 1) + "*" + bname(k + 2, n) + "]",
                    lhs, rhs);
}

// ---------------------------------------------------------------------------
// The subalgebra generated by b_0..b_{m-1}.

TildeContext TildeContext::make(const AlgebraContext& ctx, int m) {
  const int n = ctx.n();
  if (m < 1 || n % m != 0) throw InvalidInput("m must divide n");
  TildeContext t;
  t.n = n;
  t.m = m;
  t.q = n / m;
  if (t.q <= 1) throw InvalidInput("need n = m q with q > 1");
  for (int g = 0; g < m; ++g) t.generators.push_back(b_element(ctx, g));
  t.isomorphism = "b_g -> (1/" + std::to_string(m) + ") sum_{i<" + std::to_string(m) + "} w~^(i g) y_i, w~ = w^" +
                  std::to_string(t.q);
  std::vector<AlgElem> base;
  for (int k = 0; k < m; ++k) base.push_back(graded_commutator(t.generators[0], t.generators[k]));
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < m; ++l) {
      const int other = static_cast<int>(mod_index(k - l, m));
      t.relations.push_back({"[b0, b" + std::to_string(k) + "] = [b" + std::to_string(l) + ", b" +
                                 std::to_string(other) + "]",
                             base[k] == graded_commutator(t.generators[l], t.generators[other])});
    }
  }
  return t;
}

bool TildeContext::relations_hold() const {
  return std::all_of(relations.begin(), relations.end(), [](const RelationCheck& c) { return c.holds; });
}

bool TildeReport::all_found() const {
  return std::all_of(entries.begin(), entries.end(), [](const TildeEntry& e) { return e.status.found; });
}

TildeReport tilde_inclusion_check(const AlgebraContext& ctx, int m, int sample_degree, int max_t) {
  if (sample_degree < 1) throw InvalidInput("sample degree must be at least 1");
  if (max_t < 0) max_t = 2 * ctx.n();
  TildeReport report{TildeContext::make(ctx, m), {}};
  RightIdealSearch search(ctx, RightIdealSpec{1, {}, {}}, false);
  for (int d = 1; d <= sample_degree; ++d) {
    // words whose some nonempty prefix has b-weight 1 mod m span the piece
    SubspaceBasis sub(ctx, d, false, CyclotomicField(ctx.cyc()));
    std::vector<int> word(d, 0);
    while (true) {
      int weight = 0;
      bool generated = false;
      for (int p = 0; p < d && !generated; ++p) {
        weight = (weight + word[p]) % m;
        generated = weight == 1 % m;
      }
      if (generated) {
        AlgElem w = report.context.generators[word[0]];
        std::string text = "b" + std::to_string(word[0]);
        for (int p = 1; p < d; ++p) {
          w = mul(w, report.context.generators[word[p]]);
          text += "*b" + std::to_string(word[p]);
        }
        if (!w.is_zero() && sub.add(w)) {
          SearchStatus st = saturate(search, ctx, m, w, max_t, text);
          report.entries.push_back({d, text, std::move(w), std::move(st)});
        }
      }
      int p = d - 1;
      while (p >= 0 && word[p] == m - 1) word[p--] = 0;
      if (p < 0) break;
      ++word[p];
    }
  }
  return report;
}

}  // namespace skewlab
