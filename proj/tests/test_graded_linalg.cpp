#include <doctest.h>

#include <omp.h>

#include "oracle.hpp"
#include "skewlab/graded_linalg.hpp"

using namespace skewlab;

namespace {

template <class Sub, class Span>
void check_same_space(const Sub& sub, const Span& oracle_span, const std::vector<SmashElem>& basis) {
  REQUIRE(sub.rank() == oracle_span.rank());
  for (const auto& b : basis) CHECK(oracle_span.contains(oracle::dense(b)));
}

}  // namespace

TEST_CASE("spans") {
  const AlgebraContext c2(2);
  const AlgElem x0 = AlgElem::generator(c2, 0), x1 = AlgElem::generator(c2, 1);
  CHECK(span(c2, 1, {x0, x0}).rank() == 1);
  CHECK(span(c2, 1, {}).rank() == 0);
  const auto s = span(c2, 1, {b_element(c2, 0), b_element(c2, 1)});
  CHECK(s.rank() == 2);
  CHECK(basis_elements(s) == std::vector<AlgElem>{x0, x1});
  CHECK_THROWS_AS(span(c2, 2, {x0}), InvalidInput);
}

TEST_CASE("membership with witnesses") {
  const AlgebraContext c2(2);
  const AlgElem x0 = AlgElem::generator(c2, 0), x1 = AlgElem::generator(c2, 1);
  CHECK(contains(c2, {x0}, x0 * c2.scalar(Rational(1, 2))).contained);
  CHECK_FALSE(contains(c2, {x0}, x1).contained);
  const auto r = contains(c2, {b_element(c2, 0), b_element(c2, 1)}, x0);
  REQUIRE(r.contained);
  REQUIRE(r.witness);
  CHECK(r.witness->valid());
  REQUIRE(r.witness->terms.size() == 2);
  for (const auto& t : r.witness->terms) CHECK(t.coefficient.is_one());
}

TEST_CASE("eigenspaces of sigma") {
  const AlgebraContext c2(2);
  CHECK(basis_elements(r_gamma_basis(c2, 0, 1)).size() == 1);
  CHECK(r_gamma_basis(c2, 0, 1).contains(b_element(c2, 0)));
  CHECK(r_gamma_basis(c2, 1, 1).contains(b_element(c2, 1)));
  CHECK(r_gamma_basis(c2, 0, 0).rank() == 1);
  CHECK(r_gamma_basis(c2, 1, 0).rank() == 0);
}

TEST_CASE("eigenspaces match the b/c weight span") {
  for (int n = 2; n <= 4; ++n) {
    const AlgebraContext ctx(n);
    for (int d = 0; d <= 4; ++d) {
      std::size_t total = 0;
      for (int g = 0; g < n; ++g) {
        const auto sub = r_gamma_basis(ctx, g, d);
        const auto ref = oracle::weight_span(ctx, g, d);
        REQUIRE(sub.rank() == ref.rank());
        for (const auto& b : basis_elements(sub)) CHECK(ref.contains(oracle::dense(b)));
        total += sub.rank();
      }
      CHECK(total == monomial_count(n, d));
    }
  }
}

TEST_CASE("ideal pieces match the brute-force span over all basis pairs") {
  for (int n = 2; n <= 3; ++n) {
    const AlgebraContext ctx(n);
    for (int d = 0; d <= 3; ++d) {
      const auto sub = ideal_piece_e0(ctx, d);
      check_same_space(sub, oracle::brute_force_e0(ctx, d), basis_smash_elements(sub));
    }
  }
  const AlgebraContext c2(2);
  CHECK(ideal_piece_e0(c2, 0).rank() == 1);
  CHECK(ideal_piece_e0(c2, 0).contains(e_element(c2, 0)));
  CHECK(smash_piece_dim(2, 0) - ideal_piece_e0(c2, 0).rank() == 1);
  CHECK(ideal_piece_e0(AlgebraContext(3), 0).rank() == 1);
}

TEST_CASE("parallel and serial ideal kernels agree") {
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  for (int n : {3, 4}) {
    const AlgebraContext ctx(n);
    const CyclotomicField f(ctx.cyc());
    for (int d = 1; d <= 3; ++d) {
      const auto par = ideal_piece_e0(ctx, d, f, false, true);
      const auto ser = ideal_piece_e0(ctx, d, f, false, false);
      REQUIRE(par.echelon().rows_by_pivot() == ser.echelon().rows_by_pivot());
      const PrimeField pf(default_prime(n), n);
      const auto ppar = ideal_piece_e0(ctx, d, pf, false, true);
      const auto pser = ideal_piece_e0(ctx, d, pf, false, false);
      CHECK(ppar.echelon().rows_by_pivot() == pser.echelon().rows_by_pivot());
    }
  }
  omp_set_num_threads(saved);
}

TEST_CASE("ideal membership witnesses") {
  const AlgebraContext ctx(3);
  const SmashElem target = SmashElem::embed(AlgElem::generator(ctx, 1)) * e_element(ctx, 0) *
                           SmashElem::embed(AlgElem::generator(ctx, 2) * AlgElem::generator(ctx, 0));
  const auto r = ideal_e0_membership(ctx, target);
  REQUIRE(r.contained);
  REQUIRE(r.witness);
  CHECK(r.witness->valid());
  for (const auto& t : r.witness->terms) CHECK(t.generator_label == "e0");
  CHECK_FALSE(ideal_e0_membership(ctx, SmashElem::embed(AlgElem::generator(ctx, 0))).contained);
}

TEST_CASE("right ideal pieces") {
  const AlgebraContext c2(2);
  RightIdealSpec r1;
  r1.gamma = 1;
  const auto p1 = right_ideal_piece(c2, r1, 1);
  CHECK(p1.rank() == 1);
  CHECK(p1.contains(b_element(c2, 1)));
  const auto p2 = right_ideal_piece(c2, r1, 2);
  const auto ref = span(c2, 2, {b_element(c2, 1) * AlgElem::generator(c2, 0), b_element(c2, 1) * AlgElem::generator(c2, 1)});
  for (const auto& b : basis_elements(ref)) CHECK(p2.contains(b));
  // x0*x1 has weight 1 itself, so the piece is all of A_2
  CHECK(ref.rank() == 2);
  CHECK(p2.rank() == 3);
  CHECK(p2.contains(AlgElem::generator(c2, 0) * AlgElem::generator(c2, 1)));
  RightIdealSpec central;
  central.central = {0};
  for (int n = 2; n <= 4; ++n) CHECK(right_ideal_piece(AlgebraContext(n), central, 1).rank() == 0);

  // the ladder equals the naive sum over every split of the degree
  for (int n = 2; n <= 4; ++n) {
    const AlgebraContext ctx(n);
    for (int g = 0; g < n; ++g)
      for (int d = 1; d <= 3; ++d) {
        RightIdealSpec spec;
        spec.gamma = g;
        spec.central = {(g + 1) % n};
        std::vector<AlgElem> gens;
        for (int d1 = 1; d1 <= d; ++d1)
          for (const auto& r : basis_elements(r_gamma_basis(ctx, g, d1)))
            for (const auto& m : monomials_of_degree(n, d - d1)) gens.push_back(r * AlgElem::monomial(ctx, m));
        if (d >= 2)
          for (const auto& m : monomials_of_degree(n, d - 2))
            gens.push_back(c_element(ctx, (g + 1) % n) * AlgElem::monomial(ctx, m));
        const auto naive = span(ctx, d, gens);
        const auto ladder = right_ideal_piece(ctx, spec, d);
        REQUIRE(ladder.rank() == naive.rank());
        for (const auto& b : basis_elements(naive)) CHECK(ladder.contains(b));
      }
  }
}

TEST_CASE("right ideal witnesses") {
  const AlgebraContext ctx(4);
  RightIdealSpec spec;
  spec.gamma = 1;
  const AlgElem target = c_element(ctx, 1) * c_element(ctx, 2);
  const auto r = right_ideal_membership(ctx, spec, target);
  REQUIRE(r.contained);
  CHECK(r.witness->valid());
  for (const auto& t : r.witness->terms) CHECK(sigma_weight(t.generator.to_plain()) == 1);
}

TEST_CASE("modular screening") {
  const AlgebraContext c4(4);
  std::vector<AlgElem> bs;
  for (int g = 0; g < 4; ++g) bs.push_back(b_element(c4, g));
  const uint64_t p = next_prime_one_mod(4, 1000116);
  CHECK(p == 1000117);
  CHECK(screen_rank(c4, 1, bs, p) == 4);
  CHECK(screen_rank(c4, 1, bs, p) == span(c4, 1, bs).rank());
  CHECK_THROWS(screen_rank(c4, 1, bs, 7));

  const AlgebraContext c2(2);
  CHECK(screen_ideal_e0_membership(c2, e_element(c2, 0), default_prime(2)).contained_mod_p);
  CHECK_FALSE(screen_ideal_e0_membership(c2, e_element(c2, 1), default_prime(2)).contained_mod_p);
  CHECK(default_prime(4) != default_prime(4, 1));
  CHECK(default_prime(4, 1) % 4 == 1);
}

TEST_CASE("Hilbert profiles") {
  const AlgebraContext c2(2);
  const auto h2 = hilbert_quotient(c2, 12);
  CHECK(h2.dims == std::vector<uint64_t>{1, 1, 0});
  CHECK(h2.certified_zero_from == 2);
  CHECK(h2.zero_propagation_checked);
  CHECK(screen_hilbert_quotient(c2, 12, default_prime(2)).dims == h2.dims);

  const AlgebraContext c3(3);
  const auto h3 = screen_hilbert_quotient(c3, 6, default_prime(3));
  CHECK(h3.dims == std::vector<uint64_t>{2, 4, 4, 4, 4, 4, 4});
  CHECK_FALSE(h3.certified_zero_from);
  CHECK(hilbert_quotient(c3, 4).dims == std::vector<uint64_t>{2, 4, 4, 4, 4});

  // n * C(n+d-1, d)
  CHECK(smash_piece_dim(4, 5) == 224);
  CHECK(smash_piece_dim(3, 0) == 3);
}
