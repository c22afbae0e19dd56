// Coefficient fields for the linear-algebra layer: the exact cyclotomic
// field and a prime field F_p with p = 1 (mod n), where w is sent to a
// primitive n-th root of unity mod p.

#ifndef SKEWLAB_FIELDS_HPP
#define SKEWLAB_FIELDS_HPP

#include <cstdint>
#include <string>

#include "skewlab/cyclotomic.hpp"

namespace skewlab {

class CyclotomicField {
 public:
  using Element = CycNumber;
  static constexpr bool kExact = true;

  explicit CyclotomicField(const CycContext& ctx) : ctx_(&ctx) {}

  const CycContext& context() const { return *ctx_; }
  Element zero() const { return CycNumber(*ctx_); }
  Element one() const { return CycNumber(*ctx_, 1L); }
  bool is_zero(const Element& a) const { return a.is_zero(); }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const { return a.inverse(); }
  void add_to(Element& acc, const Element& a) const { acc += a; }
  void sub_mul(Element& acc, const Element& a, const Element& b) const { acc.sub_mul(a, b); }
  Element from_cyc(const CycNumber& c) const { return c; }
  std::string to_string(const Element& a) const { return a.to_string(); }

 private:
  const CycContext* ctx_;
};

bool is_prime(uint64_t p);

/// Smallest prime p > above with p = 1 (mod n).
uint64_t next_prime_one_mod(int n, uint64_t above);

/// Default screening threshold for primes.
inline constexpr uint64_t kDefaultPrimeFloor = uint64_t{1} << 20;

class PrimeField {
 public:
  using Element = uint64_t;
  static constexpr bool kExact = false;

  /// Throws InvalidInput-like std::invalid_argument unless p is a prime
  /// below 2^62 with p = 1 (mod n).
  PrimeField(uint64_t p, int n);

  uint64_t modulus() const { return p_; }
  int order() const { return n_; }
  /// The image of w: a primitive n-th root of unity mod p.
  Element root() const { return root_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element pow(Element a, uint64_t e) const;
  Element inv(Element a) const;
  void add_to(Element& acc, Element a) const { acc = add(acc, a); }
  void sub_mul(Element& acc, Element a, Element b) const { acc = sub(acc, mul(a, b)); }

  /// Throws DivisionByZero when the denominator vanishes mod p.
  Element from_rational(const Rational& r) const;
  Element from_cyc(const CycNumber& c) const;
  std::string to_string(Element a) const { return std::to_string(a); }

 private:
  uint64_t p_;
  int n_;
  Element root_ = 0;
};

}  // namespace skewlab

#endif  // SKEWLAB_FIELDS_HPP
