#include "skewlab/smash_product.hpp"

#include <omp.h>

#include <algorithm>
#include <unordered_map>

namespace skewlab {

namespace {

std::vector<SmashTerm> normalize_smash(std::vector<SmashTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const SmashTerm& a, const SmashTerm& b) { return a.first < b.first; });
  std::vector<SmashTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.is_zero()) out.pop_back();
  return out;
}

}  // namespace

SmashElem::SmashElem(const AlgebraContext& ctx, std::vector<SmashTerm> terms) : ctx_(ctx) {
  for (auto& t : terms) {
    if (t.first.mono.n() != ctx.n()) throw InvalidInput("SmashElem: monomial has the wrong number of generators");
    t.first.power = static_cast<int>(mod_index(t.first.power, ctx.n()));
  }
  terms_ = normalize_smash(std::move(terms));
}

SmashElem SmashElem::embed(const AlgElem& a) {
  std::vector<SmashTerm> terms;
  terms.reserve(a.size());
  for (const auto& [m, c] : a.terms()) terms.push_back({SmashKey{m, 0}, c});
  return SmashElem(a.context(), std::move(terms));
}

SmashElem SmashElem::group(const AlgebraContext& ctx, int power) {
  return basis(ctx, Monomial(ctx.n()), power);
}

SmashElem SmashElem::basis(const AlgebraContext& ctx, const Monomial& m, int power) {
  std::vector<SmashTerm> terms;
  terms.push_back({SmashKey{m, power}, ctx.scalar(1)});
  return SmashElem(ctx, std::move(terms));
}

std::optional<int> SmashElem::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().first.mono.degree();
  if (terms_.back().first.mono.degree() != d) return std::nullopt;
  return d;
}

bool SmashElem::is_plain() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const SmashTerm& t) { return t.first.power == 0; });
}

AlgElem SmashElem::to_plain() const {
  if (!is_plain()) throw InvalidInput("element has group components and is not in A");
  std::vector<Term> terms;
  for (const auto& [k, c] : terms_) terms.emplace_back(k.mono, c);
  return AlgElem(ctx_, std::move(terms));
}

SmashElem& SmashElem::operator+=(const SmashElem& o) {
  std::vector<SmashTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  terms_ = normalize_smash(std::move(all));
  return *this;
}

SmashElem& SmashElem::operator-=(const SmashElem& o) { return *this += -o; }

SmashElem& SmashElem::operator*=(const CycNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second = t.second * c;
  return *this;
}

SmashElem SmashElem::operator-() const {
  SmashElem out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string SmashElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string body = k.mono.to_string();
    if (k.power != 0) {
      body += " # s";
      if (k.power > 1) body += "^" + std::to_string(k.power);
    }
    out += format_term(c, body, first);
    first = false;
  }
  return out;
}

namespace {

struct SmashKeyHash {
  std::size_t operator()(const SmashKey& k) const noexcept {
    return k.mono.hash() * 31u + static_cast<std::size_t>(k.power);
  }
};

using SmashAccumulator = std::unordered_map<SmashKey, CycNumber, SmashKeyHash>;

void accumulate_smash_row(const SmashTerm& left, const std::vector<SmashTerm>& right, int n,
                          SmashAccumulator& acc) {
  const Monomial& a = left.first.mono;
  const int i = left.first.power;
  for (const auto& [key, c] : right) {
    // a # s^i times b # s^j = a sigma^i(b) # s^{i+j}
    const Monomial shifted = key.mono.shifted(i);
    const int sign = sigma_sign(key.mono, i) * mono_mul_sign(a, shifted);
    CycNumber& slot = acc[SmashKey{a.times(shifted), (i + key.power) % n}];
    if (sign > 0)
      slot.add_mul(left.second, c);
    else
      slot.sub_mul(left.second, c);
  }
}

std::vector<SmashTerm> drain(SmashAccumulator& acc) {
  std::vector<SmashTerm> terms;
  terms.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!c.is_zero()) terms.push_back({k, std::move(c)});
  return terms;
}

}  // namespace

SmashElem smash_mul_serial(const SmashElem& u, const SmashElem& v) {
  if (!(u.context() == v.context())) throw InvalidInput("elements belong to different algebras");
  SmashAccumulator acc;
  for (const auto& t : u.terms()) accumulate_smash_row(t, v.terms(), u.context().n(), acc);
  return SmashElem(u.context(), drain(acc));
}

SmashElem smash_mul(const SmashElem& u, const SmashElem& v) {
  if (!(u.context() == v.context())) throw InvalidInput("elements belong to different algebras");
  const int threads = omp_get_max_threads();
  if (threads <= 1 || u.size() < 2 || u.size() * v.size() < 4096) return smash_mul_serial(u, v);
  std::vector<SmashAccumulator> partial(threads);
  const auto& ut = u.terms();
  const int n = u.context().n();
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < ut.size(); ++i)
    accumulate_smash_row(ut[i], v.terms(), n, partial[omp_get_thread_num()]);
  for (int t = 1; t < threads; ++t)
    for (auto& [k, c] : partial[t]) partial[0][k] += c;
  return SmashElem(u.context(), drain(partial[0]));
}

SmashElem operator*(const SmashElem& u, const SmashElem& v) { return smash_mul(u, v); }

SmashElem power(const SmashElem& u, int exponent) {
  if (exponent < 0) throw InvalidInput("negative power");
  SmashElem result = SmashElem::group(u.context(), 0);
  for (int i = 0; i < exponent; ++i) result = smash_mul(result, u);
  return result;
}

SmashElem graded_commutator(const SmashElem& u, const SmashElem& v) {
  if (!u.is_homogeneous() || !v.is_homogeneous())
    throw InvalidInput("graded commutator needs homogeneous operands");
  if (u.is_zero() || v.is_zero()) return SmashElem(u.context());
  const int du = *u.homogeneous_degree();
  const int dv = *v.homogeneous_degree();
  if ((du * dv) % 2 == 0) return smash_mul(u, v) - smash_mul(v, u);
  return smash_mul(u, v) + smash_mul(v, u);
}

SmashElem e_element(const AlgebraContext& ctx, long gamma) {
  const int n = ctx.n();
  std::vector<SmashTerm> terms;
  for (int i = 0; i < n; ++i)
    terms.push_back({SmashKey{Monomial(n), i}, ctx.omega(gamma * i) * Rational(1, n)});
  return SmashElem(ctx, std::move(terms));
}

bool PresentationReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

PresentationReport presentation_check(const AlgebraContext& ctx) {
  const int n = ctx.n();
  PresentationReport report;
  report.n = n;
  std::vector<SmashElem> b, e;
  for (int g = 0; g < n; ++g) {
    b.push_back(SmashElem::embed(b_element(ctx, g)));
    e.push_back(e_element(ctx, g));
  }
  for (int a = 0; a < n; ++a) {
    for (int g = 0; g < n; ++g) {
      const int shifted = static_cast<int>(mod_index(a - g, n));
      report.checks.push_back({"e" + std::to_string(a) + "*b" + std::to_string(g) + " = b" +
                                   std::to_string(g) + "*e" + std::to_string(shifted),
                               smash_mul(e[a], b[g]) == smash_mul(b[g], e[shifted])});
    }
  }
  const SmashElem zero(ctx);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const SmashElem expected = i == j ? e[i] : zero;
      report.checks.push_back({"e" + std::to_string(i) + "*e" + std::to_string(j) + " = " +
                                   (i == j ? "e" + std::to_string(i) : std::string("0")),
                               smash_mul(e[i], e[j]) == expected});
    }
  }
  std::vector<SmashElem> base(n, SmashElem(ctx));
  for (int k = 0; k < n; ++k) base[k] = graded_commutator(b[0], b[k]);
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      const int other = static_cast<int>(mod_index(k - l, n));
      report.checks.push_back({"[b0, b" + std::to_string(k) + "] = [b" + std::to_string(l) + ", b" +
                                   std::to_string(other) + "]",
                               base[k] == graded_commutator(b[l], b[other])});
    }
  }
  return report;
}

bool sigma_central_on_e0(const AlgebraContext& ctx) {
  const SmashElem s = SmashElem::group(ctx, 1);
  const SmashElem e0 = e_element(ctx, 0);
  return smash_mul(s, e0) == e0 && smash_mul(e0, s) == e0;
}

}  // namespace skewlab
