// Exact arithmetic in the cyclotomic field Q(w), w a primitive n-th root of unity.
//
// Elements are stored as rational polynomials in w of degree < phi(n),
// reduced modulo the n-th cyclotomic polynomial, so the representation of a
// field element is unique.

#ifndef SKEWLAB_CYCLOTOMIC_HPP
#define SKEWLAB_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Integer polynomial, entry i is the coefficient of x^i.
using IntPoly = std::vector<Integer>;

/// Rational polynomial, entry i is the coefficient of x^i.
using RatPoly = std::vector<Rational>;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

int euler_phi(int n);

/// Phi_n(x): x^n - 1 divided exactly by Phi_d(x) for every proper divisor d.
IntPoly cyclotomic_polynomial(int n);

/// Rational polynomial helpers used by the field inverse. Results are trimmed.
RatPoly poly_trim(RatPoly p);
void poly_divmod(const RatPoly& num, const RatPoly& den, RatPoly& quot, RatPoly& rem);

/// Immutable per-order data. Obtain through get(); instances live for the
/// whole program and are shared by every thread.
class CycContext {
 public:
  static const CycContext& get(int n);

  int n() const { return n_; }
  int degree() const { return degree_; }
  const IntPoly& phi_poly() const { return phi_; }

  /// x^k mod Phi_n for 0 <= k < 2*degree - 1, as integer coefficient rows.
  const std::vector<int64_t>& reduction_row(int k) const { return reduce_[k]; }

  CycContext(const CycContext&) = delete;
  CycContext& operator=(const CycContext&) = delete;

 private:
  explicit CycContext(int n);

  int n_;
  int degree_;
  IntPoly phi_;
  std::vector<std::vector<int64_t>> reduce_;
};

class CycNumber {
 public:
  /// A detached zero. It adopts the context of the first operand it is
  /// combined with; prefer the context-taking constructors.
  CycNumber() = default;
  explicit CycNumber(const CycContext& ctx);
  CycNumber(const CycContext& ctx, const Rational& r);
  CycNumber(const CycContext& ctx, long r) : CycNumber(ctx, Rational(r)) {}

  /// Reduces an arbitrary rational polynomial in w modulo Phi_n.
  static CycNumber from_poly(const CycContext& ctx, const RatPoly& poly);

  const CycContext* context() const { return ctx_; }
  std::span<const Rational> coeffs() const { return c_; }

  bool is_zero() const;
  /// True when the value lies in Q (only the constant coefficient is set).
  bool is_rational() const;
  bool is_one() const;
  /// Constant coefficient; meaningful as the value only when is_rational().
  Rational rational_part() const;

  CycNumber& operator+=(const CycNumber& o);
  CycNumber& operator-=(const CycNumber& o);
  CycNumber& operator*=(const CycNumber& o);
  CycNumber& operator*=(const Rational& r);
  CycNumber operator-() const;

  /// this -= a * b and this += a * b, the elimination and product hot paths.
  void sub_mul(const CycNumber& a, const CycNumber& b);
  void add_mul(const CycNumber& a, const CycNumber& b);

  /// Inverse via the extended Euclidean algorithm against Phi_n.
  CycNumber inverse() const;

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(CycNumber a, const Rational& r) { return a *= r; }
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
  friend bool operator==(const CycNumber& a, const CycNumber& b);

  /// Canonical text, e.g. "1/2*w^2 - w + 3". Zero prints as "0".
  std::string to_string() const;

 private:
  void adopt(const CycContext* ctx);
  void fused_mul(const CycNumber& a, const CycNumber& b, int sign);

  const CycContext* ctx_ = nullptr;
  std::vector<Rational> c_;
};

CycNumber omega_power(const CycContext& ctx, long k);

/// sum_{i=0}^{n-1} w^{ik}.
CycNumber root_sum(const CycContext& ctx, long k);

inline long mod_index(long k, long n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

}  // namespace skewlab

#endif  // SKEWLAB_CYCLOTOMIC_HPP
