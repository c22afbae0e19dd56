#include "skewlab/fields.hpp"

#include <stdexcept>
#include <vector>

namespace skewlab {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (p % q == 0) return p == q;
  }
  uint64_t d = p - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic Miller-Rabin bases for 64-bit inputs
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod(a, d, p);
    if (x == 1 || x == p - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, p);
      if (x == p - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t next_prime_one_mod(int n, uint64_t above) {
  if (n < 1) throw std::invalid_argument("next_prime_one_mod: n must be positive");
  uint64_t p = above + 1;
  const uint64_t r = p % static_cast<uint64_t>(n);
  if (r != 1 % static_cast<uint64_t>(n)) p += (static_cast<uint64_t>(n) + 1 - r) % static_cast<uint64_t>(n);
  while (!is_prime(p)) p += static_cast<uint64_t>(n);
  return p;
}

PrimeField::PrimeField(uint64_t p, int n) : p_(p), n_(n) {
  if (n < 1) throw std::invalid_argument("PrimeField: n must be positive");
  if (p >= (uint64_t{1} << 62) || !is_prime(p))
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a usable prime");
  if ((p - 1) % static_cast<uint64_t>(n) != 0)
    throw std::invalid_argument("PrimeField: prime " + std::to_string(p) + " is not 1 mod " +
                                std::to_string(n));
  const auto factors = prime_factors(n);
  for (uint64_t a = 2; a < p; ++a) {
    const uint64_t cand = powmod(a, (p - 1) / static_cast<uint64_t>(n), p);
    bool primitive = true;
    for (int q : factors)
      if (powmod(cand, static_cast<uint64_t>(n / q), p) == 1) primitive = false;
    if (primitive) {
      root_ = cand;
      break;
    }
  }
  if (n == 1) root_ = 1;
  if (root_ == 0) throw std::logic_error("PrimeField: no primitive root of unity found");
}

PrimeField::Element PrimeField::pow(Element a, uint64_t e) const { return powmod(a, e, p_); }

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw DivisionByZero("PrimeField: inverse of zero");
  return powmod(a, p_ - 2, p_);
}

PrimeField::Element PrimeField::from_rational(const Rational& r) const {
  const Integer pz = Integer(static_cast<unsigned long>(p_));
  Integer num = r.get_num() % pz;
  Integer den = r.get_den() % pz;
  if (num < 0) num += pz;
  if (den == 0) throw DivisionByZero("PrimeField: denominator vanishes mod p");
  return mul(static_cast<Element>(num.get_ui()), inv(static_cast<Element>(den.get_ui())));
}

PrimeField::Element PrimeField::from_cyc(const CycNumber& c) const {
  if (c.context() != nullptr && c.context()->n() != n_)
    throw std::invalid_argument("PrimeField: coefficient lives in a different cyclotomic field");
  Element acc = 0;
  Element w = 1;
  for (const auto& coeff : c.coeffs()) {
    if (sgn(coeff) != 0) acc = add(acc, mul(from_rational(coeff), w));
    w = mul(w, root_);
  }
  return acc;
}

}  // namespace skewlab
