#include "skewlab/skew_algebra.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace skewlab {

AlgebraContext::AlgebraContext(int n) : n_(n) {
  if (n < 2 || n > kMaxGenerators)
    throw InvalidInput("number of generators n must lie in [2, " + std::to_string(kMaxGenerators) + "]");
  cyc_ = &CycContext::get(n);
}

std::vector<Term> normalize_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
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

AlgElem::AlgElem(const AlgebraContext& ctx, std::vector<Term> terms)
    : ctx_(ctx), terms_(normalize_terms(std::move(terms))) {
  for (const auto& [m, c] : terms_)
    if (m.n() != ctx.n()) throw InvalidInput("AlgElem: monomial has the wrong number of generators");
}

AlgElem AlgElem::one(const AlgebraContext& ctx) { return monomial(ctx, Monomial(ctx.n())); }

AlgElem AlgElem::scalar(const AlgebraContext& ctx, const CycNumber& c) {
  std::vector<Term> t;
  t.emplace_back(Monomial(ctx.n()), c);
  return AlgElem(ctx, std::move(t));
}

AlgElem AlgElem::monomial(const AlgebraContext& ctx, const Monomial& m) {
  std::vector<Term> t;
  t.emplace_back(m, ctx.scalar(1));
  return AlgElem(ctx, std::move(t));
}

AlgElem AlgElem::generator(const AlgebraContext& ctx, int i) {
  return monomial(ctx, Monomial::generator(ctx.n(), static_cast<int>(mod_index(i, ctx.n()))));
}

std::optional<int> AlgElem::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  const int d = terms_.front().first.degree();
  if (terms_.back().first.degree() != d) return std::nullopt;
  return d;
}

CycNumber AlgElem::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return CycNumber(ctx_.cyc());
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      CycNumber c = a[i].second;
      if (subtract)
        c -= b[j].second;
      else
        c += b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

AlgElem& AlgElem::operator+=(const AlgElem& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

AlgElem& AlgElem::operator-=(const AlgElem& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

AlgElem& AlgElem::operator*=(const CycNumber& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second = t.second * c;
  return *this;
}

AlgElem AlgElem::operator-() const {
  AlgElem out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

std::string format_term(const CycNumber& c, const std::string& body, bool first) {
  std::ostringstream os;
  const bool unit_body = body == "1";
  if (c.is_rational()) {
    const Rational r = c.rational_part();
    if (first)
      os << (sgn(r) < 0 ? "-" : "");
    else
      os << (sgn(r) < 0 ? " - " : " + ");
    const Rational mag = abs(r);
    if (unit_body) {
      os << mag.get_str();
    } else if (mag == 1) {
      os << body;
    } else if (mag.get_den() == 1) {
      os << mag.get_str() << "*" << body;
    } else {
      os << "(" << mag.get_str() << ")*" << body;
    }
  } else {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")";
    if (!unit_body) os << "*" << body;
  }
  return os.str();
}

std::string AlgElem::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    out += format_term(c, m.to_string(), first);
    first = false;
  }
  return out;
}

namespace {

using Accumulator = std::unordered_map<Monomial, CycNumber>;

void accumulate_row(const Term& left, const std::vector<Term>& right, Accumulator& acc) {
  for (const auto& [m, c] : right) {
    const int s = mono_mul_sign(left.first, m);
    CycNumber& slot = acc[left.first.times(m)];
    if (s > 0)
      slot.add_mul(left.second, c);
    else
      slot.sub_mul(left.second, c);
  }
}

std::vector<Term> drain(Accumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  return normalize_terms(std::move(terms));
}

void check_same_context(const AlgElem& u, const AlgElem& v) {
  if (!(u.context() == v.context())) throw InvalidInput("elements belong to different algebras");
}

}  // namespace

AlgElem mul_serial(const AlgElem& u, const AlgElem& v) {
  check_same_context(u, v);
  Accumulator acc;
  acc.reserve(u.size() * v.size());
  for (const auto& t : u.terms()) accumulate_row(t, v.terms(), acc);
  return AlgElem(u.context(), drain(acc));
}

AlgElem mul(const AlgElem& u, const AlgElem& v) {
  check_same_context(u, v);
  const int threads = omp_get_max_threads();
  if (threads <= 1 || u.size() < 2 || u.size() * v.size() < 4096) return mul_serial(u, v);

  std::vector<Accumulator> partial(threads);
  const auto& ut = u.terms();
#pragma omp parallel for schedule(dynamic, 4)
  for (std::size_t i = 0; i < ut.size(); ++i) accumulate_row(ut[i], v.terms(), partial[omp_get_thread_num()]);

  Accumulator& total = partial[0];
  for (int t = 1; t < threads; ++t) {
    for (auto& [m, c] : partial[t]) total[m] += c;
    partial[t].clear();
  }
  return AlgElem(u.context(), drain(total));
}

AlgElem operator*(const AlgElem& u, const AlgElem& v) { return mul(u, v); }

AlgElem power(const AlgElem& u, int exponent) {
  if (exponent < 0) throw InvalidInput("negative power");
  AlgElem result = AlgElem::one(u.context());
  for (int i = 0; i < exponent; ++i) result = mul(result, u);
  return result;
}

AlgElem sigma_apply(const AlgElem& u, int power) {
  const int n = u.context().n();
  const int p = static_cast<int>(mod_index(power, n));
  if (p == 0) return u;
  std::vector<Term> terms;
  terms.reserve(u.size());
  for (const auto& [m, c] : u.terms()) {
    if (sigma_sign(m, p) > 0)
      terms.emplace_back(m.shifted(p), c);
    else
      terms.emplace_back(m.shifted(p), -c);
  }
  return AlgElem(u.context(), std::move(terms));
}

AlgElem graded_commutator(const AlgElem& u, const AlgElem& v) {
  if (!u.is_homogeneous() || !v.is_homogeneous())
    throw InvalidInput("graded commutator needs homogeneous operands");
  if (u.is_zero() || v.is_zero()) return AlgElem(u.context());
  const int du = *u.homogeneous_degree();
  const int dv = *v.homogeneous_degree();
  if ((du * dv) % 2 == 0) return mul(u, v) - mul(v, u);
  return mul(u, v) + mul(v, u);
}

AlgElem b_element(const AlgebraContext& ctx, long gamma) {
  const int n = ctx.n();
  std::vector<Term> terms;
  for (int i = 0; i < n; ++i)
    terms.emplace_back(Monomial::generator(n, i), ctx.omega(i * gamma) * Rational(1, n));
  return AlgElem(ctx, std::move(terms));
}

AlgElem c_element(const AlgebraContext& ctx, long j) {
  const int n = ctx.n();
  std::vector<Term> terms;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 2;
    terms.emplace_back(Monomial(n, e), ctx.omega(i * j) * Rational(2, n * n));
  }
  return AlgElem(ctx, std::move(terms));
}

AlgElem c_via_commutator(const AlgebraContext& ctx, long j, long k) {
  return graded_commutator(b_element(ctx, k), b_element(ctx, j - k));
}

bool is_central(const AlgElem& u) {
  for (int i = 0; i < u.context().n(); ++i) {
    const AlgElem x = AlgElem::generator(u.context(), i);
    if (!(mul(u, x) == mul(x, u))) return false;
  }
  return true;
}

AlgElem eigen_projection(const AlgElem& u, long gamma) {
  const AlgebraContext& ctx = u.context();
  const int n = ctx.n();
  AlgElem total(ctx);
  for (int i = 0; i < n; ++i) {
    AlgElem shifted = sigma_apply(u, i);
    shifted *= ctx.omega(gamma * i);
    total += shifted;
  }
  total *= ctx.scalar(Rational(1, n));
  return total;
}

std::optional<int> sigma_weight(const AlgElem& u) {
  if (u.is_zero()) return std::nullopt;
  const AlgebraContext& ctx = u.context();
  const AlgElem s = sigma_apply(u, 1);
  for (int g = 0; g < ctx.n(); ++g) {
    if (s == u * ctx.omega(-g)) return g;
  }
  return std::nullopt;
}

}  // namespace skewlab
