#include <doctest.h>

#include <omp.h>

#include <random>

#include "oracle.hpp"
#include "skewlab/skew_algebra.hpp"

using namespace skewlab;

namespace {

Monomial mono(int n, std::vector<int> e) { return Monomial(n, e); }

AlgElem x(const AlgebraContext& ctx, std::vector<int> e, long c = 1) {
  return AlgElem::monomial(ctx, Monomial(ctx.n(), e)) * ctx.scalar(c);
}

Monomial random_monomial(int n, int max_deg, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, max_deg), g(0, n - 1);
  std::vector<int> e(n, 0);
  const int deg = d(rng);
  for (int k = 0; k < deg; ++k) ++e[g(rng)];
  return Monomial(n, e);
}

AlgElem random_elem(const AlgebraContext& ctx, int deg, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-5, 5), g(0, ctx.n() - 1), wp(0, ctx.n() - 1);
  AlgElem u(ctx);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(ctx.n(), 0);
    for (int k = 0; k < deg; ++k) ++e[g(rng)];
    u += x(ctx, e, coeff(rng)) * ctx.omega(wp(rng));
  }
  return u;
}

}  // namespace

TEST_CASE("monomial signs follow the letter-level relation") {
  CHECK(mono_mul_sign(mono(2, {0, 1}), mono(2, {1, 0})) == -1);
  CHECK(mono_mul_sign(mono(2, {1, 0}), mono(2, {1, 0})) == 1);
  CHECK(mono_mul_sign(mono(2, {1, 1}), mono(2, {1, 1})) == -1);
  std::mt19937 rng(11);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 200; ++trial) {
      const Monomial a = random_monomial(n, 5, rng), b = random_monomial(n, 5, rng);
      REQUIRE(mono_mul_sign(a, b) == oracle::product_sign(a, b));
      const int p = trial % n;
      REQUIRE(sigma_sign(a, p) == oracle::shift_sign(a, p));
    }
}

TEST_CASE("monomial order and ranking") {
  for (int n = 1; n <= 5; ++n)
    for (int d = 0; d <= 5; ++d) {
      const auto ms = monomials_of_degree(n, d);
      REQUIRE(ms.size() == monomial_count(n, d));
      for (std::size_t i = 0; i < ms.size(); ++i) {
        CHECK(monomial_rank(ms[i]) == i);
        if (i) CHECK(ms[i - 1] < ms[i]);
      }
    }
  CHECK(Monomial(3, {1, 0, 2}).to_string() == "x0*x2^2");
  CHECK(Monomial(3).to_string() == "1");
}

TEST_CASE("products") {
  const AlgebraContext ctx(2);
  const AlgElem x0 = AlgElem::generator(ctx, 0), x1 = AlgElem::generator(ctx, 1);
  CHECK(x1 * x0 == -x(ctx, {1, 1}));
  CHECK(x0 * AlgElem::one(ctx) == x0);
  CHECK(x(ctx, {1, 1}) * x(ctx, {1, 1}) == -x(ctx, {2, 2}));
  CHECK((x1 * x0).to_string() == "-x0*x1");
  CHECK(power(x0 + x1, 2) == x(ctx, {2, 0}) + x(ctx, {0, 2}));
}

TEST_CASE("parallel product equals the serial reference") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  std::mt19937 rng(3);
  for (int n : {3, 4, 6}) {
    const AlgebraContext ctx(n);
    for (int trial = 0; trial < 10; ++trial) {
      const AlgElem u = random_elem(ctx, 3, 40, rng), v = random_elem(ctx, 2, 30, rng), w = random_elem(ctx, 1, 5, rng);
      REQUIRE(mul(u, v) == mul_serial(u, v));
      CHECK(mul(mul(u, v), w) == mul(u, mul(v, w)));
      CHECK(mul(u, v + w) == mul(u, v) + mul(u, w));
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("sigma action") {
  const AlgebraContext ctx(3);
  CHECK(sigma_apply(x(ctx, {1, 0, 0}), 1) == x(ctx, {0, 1, 0}));
  CHECK(sigma_apply(x(ctx, {1, 0, 1}), 1) == -x(ctx, {1, 1, 0}));
  CHECK(sigma_apply(x(ctx, {2, 1, 1}), 1) == -x(ctx, {1, 2, 1}));
  std::mt19937 rng(5);
  for (int n : {2, 3, 5}) {
    const AlgebraContext c(n);
    for (int trial = 0; trial < 10; ++trial) {
      const AlgElem u = random_elem(c, 3, 6, rng), v = random_elem(c, 2, 6, rng);
      // sigma is an algebra automorphism of order n
      CHECK(sigma_apply(u * v, 1) == sigma_apply(u, 1) * sigma_apply(v, 1));
      CHECK(sigma_apply(u, n) == u);
      CHECK(sigma_apply(sigma_apply(u, 1), n - 1) == u);
    }
  }
}

TEST_CASE("b and c elements") {
  const AlgebraContext c2(2);
  const auto half = c2.scalar(Rational(1, 2));
  CHECK(b_element(c2, 0) == (x(c2, {1, 0}) + x(c2, {0, 1})) * half);
  CHECK(b_element(c2, 1) == (x(c2, {1, 0}) - x(c2, {0, 1})) * half);
  CHECK(c_element(c2, 1) == (x(c2, {2, 0}) - x(c2, {0, 2})) * half);
  CHECK(c_element(c2, 0) == (x(c2, {2, 0}) + x(c2, {0, 2})) * half);
  const AlgebraContext c4(4);
  CHECK(b_element(c4, 0) == (x(c4, {1, 0, 0, 0}) + x(c4, {0, 1, 0, 0}) + x(c4, {0, 0, 1, 0}) + x(c4, {0, 0, 0, 1})) *
                                c4.scalar(Rational(1, 4)));
  CHECK(b_element(c4, 5) == b_element(c4, 1));
  CHECK(b_element(c4, -1) == b_element(c4, 3));
}

TEST_CASE("graded commutator") {
  const AlgebraContext ctx(3);
  CHECK(graded_commutator(x(ctx, {1, 0, 0}), x(ctx, {0, 1, 0})).is_zero());
  CHECK(graded_commutator(x(ctx, {2, 0, 0}), AlgElem::one(ctx)).is_zero());
  CHECK(graded_commutator(x(ctx, {1, 0, 0}), x(ctx, {1, 0, 0})) == x(ctx, {2, 0, 0}, 2));
  CHECK_THROWS_AS(graded_commutator(x(ctx, {1, 0, 0}) + AlgElem::one(ctx), x(ctx, {1, 0, 0})), InvalidInput);
}

TEST_CASE("c_j coherence for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const AlgebraContext ctx(n);
    for (int j = 0; j < n; ++j) {
      const AlgElem cj = c_element(ctx, j);
      CHECK(is_central(cj));
      CHECK(sigma_apply(cj, 1) == cj * ctx.omega(-j));
      CHECK(sigma_weight(cj) == j);
      for (int k = 0; k < n; ++k) REQUIRE(c_via_commutator(ctx, j, k) == cj);
      CHECK(b_element(ctx, j) * b_element(ctx, j) == c_element(ctx, 2 * j) * ctx.scalar(Rational(1, 2)));
    }
    CHECK_FALSE(is_central(AlgElem::generator(ctx, 0)));
    std::vector<int> sq(n, 0);
    sq[0] = 2;
    CHECK(is_central(x(ctx, sq)));
  }
}

TEST_CASE("eigen projections split A") {
  std::mt19937 rng(9);
  for (int n : {2, 3, 4, 5}) {
    const AlgebraContext ctx(n);
    for (int trial = 0; trial < 5; ++trial) {
      const AlgElem u = random_elem(ctx, 3, 8, rng);
      AlgElem sum(ctx);
      for (int g = 0; g < n; ++g) {
        const AlgElem p = eigen_projection(u, g);
        if (!p.is_zero()) CHECK(sigma_weight(p) == g);
        CHECK(eigen_projection(p, g) == p);
        sum += p;
      }
      CHECK(sum == u);
    }
    for (int g = 0; g < n; ++g) CHECK(sigma_weight(b_element(ctx, g)) == g);
  }
}
