#include "skewlab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace skewlab {

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

// Exact division of num by a monic integer polynomial; throws if the
// remainder is nonzero.
IntPoly exact_divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw std::logic_error("exact_divide_monic: degree too small");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    Integer q = num[i];
    quot[i - dd] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= q * den[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (num[i] != 0) throw std::logic_error("exact_divide_monic: nonzero remainder");
  return quot;
}

IntPoly cyclotomic_memo(int n, std::map<int, IntPoly>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  IntPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = exact_divide_monic(std::move(p), cyclotomic_memo(d, memo));
  memo[n] = p;
  return p;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  std::map<int, IntPoly> memo;
  return cyclotomic_memo(n, memo);
}

RatPoly poly_trim(RatPoly p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  return p;
}

void poly_divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem) {
  RatPoly d = poly_trim(den);
  if (d.empty()) throw DivisionByZero("polynomial division by zero");
  rem = poly_trim(num);
  quot.assign(rem.size() >= d.size() ? rem.size() - d.size() + 1 : 0, Rational(0));
  const Rational lead = d.back();
  while (rem.size() >= d.size()) {
    const std::size_t shift = rem.size() - d.size();
    Rational q = rem.back() / lead;
    quot[shift] = q;
    for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= q * d[j];
    rem = poly_trim(std::move(rem));
  }
  quot = poly_trim(std::move(quot));
}

CycContext::CycContext(int n) : n_(n), degree_(euler_phi(n)), phi_(cyclotomic_polynomial(n)) {
  const int rows = std::max(1, 2 * degree_ - 1);
  reduce_.assign(rows, std::vector<int64_t>(degree_, 0));
  std::vector<Integer> cur(degree_, 0);
  cur[0] = 1;
  for (int k = 0; k < rows; ++k) {
    if (k > 0) {
      // multiply by x and fold x^degree back with the monic relation
      Integer top = cur[degree_ - 1];
      for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (int i = 0; i < degree_; ++i) cur[i] -= top * phi_[i];
    }
    for (int i = 0; i < degree_; ++i) {
      if (!cur[i].fits_slong_p()) throw std::overflow_error("cyclotomic reduction table overflow");
      reduce_[k][i] = cur[i].get_si();
    }
  }
}

const CycContext& CycContext::get(int n) {
  if (n < 1) throw std::invalid_argument("CycContext: n must be positive");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycContext>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[n];
  if (!slot) slot.reset(new CycContext(n));
  return *slot;
}

CycNumber::CycNumber(const CycContext& ctx) : ctx_(&ctx), c_(ctx.degree()) {}

CycNumber::CycNumber(const CycContext& ctx, const Rational& r) : ctx_(&ctx), c_(ctx.degree()) {
  c_[0] = r;
  c_[0].canonicalize();
}

CycNumber CycNumber::from_poly(const CycContext& ctx, const RatPoly& poly) {
  CycNumber out(ctx);
  const int deg = ctx.degree();
  RatPoly work = poly;
  for (auto& v : work) v.canonicalize();
  // fold high powers down one at a time with the monic relation
  for (std::size_t i = work.size(); i-- > static_cast<std::size_t>(deg);) {
    if (sgn(work[i]) == 0) continue;
    Rational top = work[i];
    for (int j = 0; j < deg; ++j) work[i - deg + j] -= top * ctx.phi_poly()[j];
    work[i] = 0;
  }
  for (int i = 0; i < deg && i < static_cast<int>(work.size()); ++i) out.c_[i] = work[i];
  return out;
}

void CycNumber::adopt(const CycContext* ctx) {
  if (ctx_ == nullptr && ctx != nullptr) {
    ctx_ = ctx;
    c_.assign(ctx->degree(), Rational(0));
  }
}

bool CycNumber::is_zero() const {
  for (const auto& v : c_)
    if (sgn(v) != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

bool CycNumber::is_one() const { return !c_.empty() && c_[0] == 1 && is_rational(); }

Rational CycNumber::rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

CycNumber& CycNumber::operator+=(const CycNumber& o) {
  if (o.ctx_ == nullptr) return *this;
  adopt(o.ctx_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] += o.c_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
  if (o.ctx_ == nullptr) return *this;
  adopt(o.ctx_);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(o.c_[i]) != 0) c_[i] -= o.c_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& r) {
  if (sgn(r) == 0) {
    for (auto& v : c_) v = 0;
    return *this;
  }
  Rational f = r;
  f.canonicalize();
  for (auto& v : c_)
    if (sgn(v) != 0) v *= f;
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
  *this = *this * o;
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& v : out.c_) v = -v;
  return out;
}

namespace {

// Accumulates sign * a * b into acc (length degree) with reduction mod Phi_n.
void accumulate_product(const CycContext& ctx, std::vector<Rational>& acc,
                        const std::vector<Rational>& a, const std::vector<Rational>& b,
                        int sign) {
  const int deg = ctx.degree();
  thread_local std::vector<int> nza, nzb;
  nza.clear();
  nzb.clear();
  for (int i = 0; i < deg; ++i) {
    if (sgn(a[i]) != 0) nza.push_back(i);
    if (sgn(b[i]) != 0) nzb.push_back(i);
  }
  if (nza.empty() || nzb.empty()) return;
  thread_local Rational prod;
  for (int i : nza) {
    for (int j : nzb) {
      mpq_mul(prod.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
      if (sign < 0) mpq_neg(prod.get_mpq_t(), prod.get_mpq_t());
      const int k = i + j;
      if (k < deg) {
        acc[k] += prod;
      } else {
        const auto& row = ctx.reduction_row(k);
        for (int t = 0; t < deg; ++t) {
          if (row[t] == 0) continue;
          if (row[t] == 1)
            acc[t] += prod;
          else if (row[t] == -1)
            acc[t] -= prod;
          else
            acc[t] += prod * Rational(static_cast<long>(row[t]));
        }
      }
    }
  }
}

}  // namespace

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  const CycContext* ctx = a.ctx_ ? a.ctx_ : b.ctx_;
  if (ctx == nullptr || a.ctx_ == nullptr || b.ctx_ == nullptr) return CycNumber();
  CycNumber out(*ctx);
  if (a.is_rational()) {
    const Rational& s = a.c_[0];
    if (sgn(s) == 0) return out;
    for (std::size_t i = 0; i < out.c_.size(); ++i)
      if (sgn(b.c_[i]) != 0) out.c_[i] = s * b.c_[i];
    return out;
  }
  if (b.is_rational()) {
    const Rational& s = b.c_[0];
    if (sgn(s) == 0) return out;
    for (std::size_t i = 0; i < out.c_.size(); ++i)
      if (sgn(a.c_[i]) != 0) out.c_[i] = a.c_[i] * s;
    return out;
  }
  accumulate_product(*ctx, out.c_, a.c_, b.c_, +1);
  return out;
}

void CycNumber::fused_mul(const CycNumber& a, const CycNumber& b, int sign) {
  if (a.ctx_ == nullptr || b.ctx_ == nullptr) return;
  adopt(a.ctx_);
  const CycNumber* scalar = a.is_rational() ? &a : (b.is_rational() ? &b : nullptr);
  if (scalar != nullptr) {
    const CycNumber& other = scalar == &a ? b : a;
    const Rational& s = scalar->c_[0];
    if (sgn(s) == 0) return;
    thread_local Rational prod;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (sgn(other.c_[i]) == 0) continue;
      mpq_mul(prod.get_mpq_t(), s.get_mpq_t(), other.c_[i].get_mpq_t());
      if (sign > 0)
        c_[i] += prod;
      else
        c_[i] -= prod;
    }
    return;
  }
  accumulate_product(*ctx_, c_, a.c_, b.c_, sign);
}

void CycNumber::sub_mul(const CycNumber& a, const CycNumber& b) { fused_mul(a, b, -1); }

void CycNumber::add_mul(const CycNumber& a, const CycNumber& b) { fused_mul(a, b, +1); }

CycNumber CycNumber::inverse() const {
  if (ctx_ == nullptr || is_zero()) throw DivisionByZero("CycNumber::inverse of zero");
  if (is_rational()) return CycNumber(*ctx_, Rational(1) / c_[0]);
  // Extended Euclid: track s with s * a == r (mod Phi_n).
  RatPoly r0(ctx_->phi_poly().begin(), ctx_->phi_poly().end());
  RatPoly r1 = poly_trim(c_);
  RatPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    RatPoly q, rem;
    poly_divmod(r0, r1, q, rem);
    // s2 = s0 - q * s1
    RatPoly qs(q.size() + s1.size(), Rational(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    RatPoly s2(std::max(s0.size(), qs.size()), Rational(0));
    for (std::size_t i = 0; i < s0.size(); ++i) s2[i] += s0[i];
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
    s0 = std::move(s1);
    s1 = poly_trim(std::move(s2));
    r0 = std::move(r1);
    r1 = std::move(rem);
    if (r1.empty()) throw std::logic_error("CycNumber::inverse: Phi_n not irreducible?");
  }
  Rational scale = Rational(1) / r1[0];
  for (auto& v : s1) v *= scale;
  return from_poly(*ctx_, s1);
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  const bool az = a.is_zero();
  const bool bz = b.is_zero();
  if (az || bz) return az && bz;
  if (a.ctx_ != b.ctx_) return false;
  return a.c_ == b.c_;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& v = c_[i];
    if (sgn(v) == 0) continue;
    Rational mag = abs(v);
    if (first) {
      if (sgn(v) < 0) os << "-";
    } else {
      os << (sgn(v) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "w";
    if (i > 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

CycNumber omega_power(const CycContext& ctx, long k) {
  const long e = mod_index(k, ctx.n());
  RatPoly p(e + 1, Rational(0));
  p[e] = 1;
  return CycNumber::from_poly(ctx, p);
}

CycNumber root_sum(const CycContext& ctx, long k) {
  CycNumber total(ctx);
  for (long i = 0; i < ctx.n(); ++i) total += omega_power(ctx, i * k);
  return total;
}

}  // namespace skewlab
