#include <doctest.h>

#include <omp.h>

#include <random>

#include "skewlab/smash_product.hpp"

using namespace skewlab;

namespace {

SmashElem random_smash(const AlgebraContext& ctx, int deg, int terms, std::mt19937& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), g(0, ctx.n() - 1);
  SmashElem u(ctx);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(ctx.n(), 0);
    for (int k = 0; k < deg; ++k) ++e[g(rng)];
    u += SmashElem::basis(ctx, Monomial(ctx.n(), e), g(rng)) * ctx.scalar(coeff(rng));
  }
  return u;
}

}  // namespace

TEST_CASE("smash multiplication rule") {
  const AlgebraContext ctx(3);
  const SmashElem s = SmashElem::group(ctx, 1);
  const SmashElem x0 = SmashElem::embed(AlgElem::generator(ctx, 0));
  const SmashElem x1 = SmashElem::embed(AlgElem::generator(ctx, 1));
  CHECK(s * x0 == SmashElem::basis(ctx, Monomial::generator(3, 1), 1));
  CHECK(x0 * x1 == SmashElem::embed(AlgElem::generator(ctx, 0) * AlgElem::generator(ctx, 1)));
  CHECK(power(s, 3) == SmashElem::group(ctx, 0));
  CHECK((s * x0).to_string() == "x1 # s");
  for (int n = 2; n <= 6; ++n) {
    const AlgebraContext c(n);
    CHECK(e_element(c, 0) * SmashElem::embed(b_element(c, 1)) ==
          SmashElem::embed(b_element(c, 1)) * e_element(c, n - 1));
  }
}

TEST_CASE("group idempotents") {
  const AlgebraContext c2(2);
  const SmashElem e0 = e_element(c2, 0);
  CHECK(e0 == (SmashElem::group(c2, 0) + SmashElem::group(c2, 1)) * c2.scalar(Rational(1, 2)));
  CHECK(e0 * e0 == e0);
  CHECK((e0 * e_element(c2, 1)).is_zero());
  for (int n = 2; n <= 8; ++n) {
    const AlgebraContext ctx(n);
    SmashElem sum(ctx);
    for (int g = 0; g < n; ++g) sum += e_element(ctx, g);
    CHECK(sum == SmashElem::group(ctx, 0));
  }
}

TEST_CASE("presentation holds for n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    const AlgebraContext ctx(n);
    const PresentationReport r = presentation_check(ctx);
    CHECK(r.n == n);
    CHECK_FALSE(r.checks.empty());
    CHECK(r.all_hold());
    CHECK(sigma_central_on_e0(ctx));
  }
}

TEST_CASE("parallel smash product equals the serial reference") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  std::mt19937 rng(21);
  for (int n : {2, 3, 5}) {
    const AlgebraContext ctx(n);
    for (int trial = 0; trial < 8; ++trial) {
      const SmashElem u = random_smash(ctx, 2, 30, rng), v = random_smash(ctx, 2, 20, rng),
                      w = random_smash(ctx, 1, 6, rng);
      REQUIRE(smash_mul(u, v) == smash_mul_serial(u, v));
      CHECK((u * v) * w == u * (v * w));
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("plain projection") {
  const AlgebraContext ctx(2);
  CHECK(SmashElem::embed(c_element(ctx, 1)).is_plain());
  CHECK(SmashElem::embed(c_element(ctx, 1)).to_plain() == c_element(ctx, 1));
  CHECK_FALSE(e_element(ctx, 0).is_plain());
  CHECK_THROWS_AS(e_element(ctx, 0).to_plain(), InvalidInput);
}
