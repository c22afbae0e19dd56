#include <doctest.h>

#include <random>

#include "skewlab/cyclotomic.hpp"
#include "skewlab/fields.hpp"

using namespace skewlab;

namespace {

IntPoly ints(std::initializer_list<long> v) {
  IntPoly p;
  for (long x : v) p.emplace_back(x);
  return p;
}

CycNumber random_cyc(const CycContext& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  RatPoly p(ctx.degree());
  for (auto& c : p) {
    c = Rational(num(rng), den(rng));
    c.canonicalize();
  }
  return CycNumber::from_poly(ctx, p);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  // degree is phi(n)
  for (int n = 1; n <= 30; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("powers of w") {
  const auto& c4 = CycContext::get(4);
  CHECK(omega_power(c4, 2) == CycNumber(c4, -1L));
  CHECK(omega_power(c4, 4).is_one());
  CHECK(omega_power(c4, 3) == -omega_power(c4, 1));
  CHECK(omega_power(c4, -1) == omega_power(c4, 3));
  for (int n = 1; n <= 12; ++n) {
    const auto& c = CycContext::get(n);
    CHECK(omega_power(c, n).is_one());
    for (int k = 1; k < n; ++k) CHECK_FALSE(omega_power(c, k).is_one());
  }
}

TEST_CASE("field operations") {
  const auto& c4 = CycContext::get(4);
  const CycNumber w = omega_power(c4, 1);
  CHECK(w.inverse() == -w);
  CHECK(w * w == CycNumber(c4, -1L));
  CHECK(w + CycNumber(c4) == w);
  CHECK(w.to_string() == "w");
  CHECK((w * Rational(1, 2) - CycNumber(c4, 3L)).to_string() == "1/2*w - 3");
  CHECK_THROWS_AS(CycNumber(c4).inverse(), DivisionByZero);

  std::mt19937 rng(7);
  for (int n : {3, 5, 7, 8, 12}) {
    const auto& c = CycContext::get(n);
    for (int trial = 0; trial < 20; ++trial) {
      const CycNumber a = random_cyc(c, rng), b = random_cyc(c, rng), d = random_cyc(c, rng);
      CHECK(a * (b + d) == a * b + a * d);
      CHECK((a * b) * d == a * (b * d));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      CycNumber acc = d;
      acc.sub_mul(a, b);
      CHECK(acc == d - a * b);
    }
  }
}

TEST_CASE("root sums") {
  CHECK(root_sum(CycContext::get(4), 0) == CycNumber(CycContext::get(4), 4L));
  CHECK(root_sum(CycContext::get(4), 2).is_zero());
  CHECK(root_sum(CycContext::get(6), 3).is_zero());
  for (int n = 2; n <= 9; ++n)
    for (int k = 1; k < n; ++k) CHECK(root_sum(CycContext::get(n), k).is_zero());
}

TEST_CASE("prime fields") {
  CHECK_THROWS(PrimeField(7, 4));
  CHECK_THROWS(PrimeField(15, 2));
  for (int n = 2; n <= 8; ++n) {
    const uint64_t p = next_prime_one_mod(n, kDefaultPrimeFloor);
    CHECK(p > kDefaultPrimeFloor);
    CHECK(is_prime(p));
    CHECK(p % n == 1);
    const PrimeField f(p, n);
    CHECK(f.pow(f.root(), n) == 1);
    for (int k = 1; k < n; ++k) CHECK(f.pow(f.root(), k) != 1);
    // the reduction map is a ring homomorphism
    const auto& c = CycContext::get(n);
    std::mt19937 rng(n);
    for (int trial = 0; trial < 10; ++trial) {
      const CycNumber a = random_cyc(c, rng), b = random_cyc(c, rng);
      CHECK(f.from_cyc(a * b) == f.mul(f.from_cyc(a), f.from_cyc(b)));
      CHECK(f.from_cyc(a + b) == f.add(f.from_cyc(a), f.from_cyc(b)));
    }
  }
  const PrimeField f(next_prime_one_mod(3, kDefaultPrimeFloor), 3);
  CHECK(f.mul(f.inv(12345), 12345) == 1);
  CHECK(f.from_rational(Rational(1, 2)) == f.inv(2));
}
