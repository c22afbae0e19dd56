#include <doctest.h>

#include "skewlab/certify.hpp"

using namespace skewlab;

namespace {

std::vector<int> exponents(const PhiReport& r) {
  std::vector<int> out;
  for (const auto& e : r.entries) out.push_back(e.found ? e.exponent : -1);
  return out;
}

}  // namespace

TEST_CASE("phi searches") {
  const AlgebraContext c2(2);
  const PhiReport r2 = phi_report(c2);
  CHECK(exponents(r2) == std::vector<int>{1, 1});
  CHECK(r2.special_subset_checked);
  CHECK(r2.special_subset_holds);
  for (const auto& e : r2.entries) {
    REQUIRE(e.witness);
    CHECK(e.witness->valid());
    CHECK(e.monotone_checked);
  }

  const AlgebraContext c4(4);
  const SearchStatus k2 = phi_membership(c4, 2);
  CHECK(k2.found);
  CHECK(k2.exponent == 1);

  const AlgebraContext c3(3);
  const SearchStatus k0 = phi_membership(c3, 0, SearchBounds{6, 12, true});
  CHECK_FALSE(k0.found);
  CHECK(k0.searched_exponent == 6);
  CHECK(k0.max_degree == 12);
}

TEST_CASE("phi for n = 4 with and without screening") {
  const AlgebraContext c4(4);
  const PhiReport exact = phi_report(c4);
  CHECK(exponents(exact) == std::vector<int>{2, 2, 1, 2});
  const PhiReport screened = phi_report(c4, {}, SearchBounds{8, 12, true});
  CHECK(exponents(screened) == exponents(exact));
  CHECK(exact.found_set() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("special subsets") {
  CHECK(phi2_set(4) == std::vector<int>{0, 1, 2, 3});
  CHECK(phi2_set(6) == std::vector<int>{1, 2, 4, 5});
  CHECK(special_subset_check(4, {1, 2, 3}));
  CHECK_FALSE(special_subset_check(4, {1}));
  CHECK(special_subset_check(4, {}));
  CHECK_FALSE(special_subset_check(5, {1, 2}));
}

TEST_CASE("psi searches") {
  const AlgebraContext c2(2);
  const SearchStatus s = psi_membership(c2, 1, 1);
  CHECK(s.found);
  CHECK(s.exponent == 1);

  const AlgebraContext c4(4);
  CHECK(psi_membership(c4, 1, 1).exponent == 1);
  const SearchStatus s01 = psi_membership(c4, 0, 1);
  REQUIRE(s01.found);
  CHECK(s01.exponent == 2);
  CHECK(s01.witness->valid());

  const PsiReport r = psi_report(c4, 0);
  std::vector<int> n0;
  for (const auto& e : r.entries) n0.push_back(e.exponent);
  CHECK(n0 == std::vector<int>{1, 3, 2, 3});

  // quotient variant: c_2 already lies in (e0)
  const SearchStatus phi2 = phi_membership(c4, 2);
  const SearchStatus bar = psi_membership(c4, 2, 0, {phi2});
  CHECK(bar.found);
  CHECK(bar.exponent == 1);
  CHECK_THROWS_AS(psi_membership(c4, 2, 0, {phi_membership(c4, 0, SearchBounds{1, 2, false})}), InvalidInput);
}

TEST_CASE("growth evidence") {
  const auto flat = growth_evidence({2, 4, 4, 4, 4, 4, 4, 4});
  CHECK(flat.all_positive);
  CHECK(flat.nondecreasing);
  CHECK(flat.fitted_degree == 0);
  CHECK(flat.gk_estimate == 1);
  const auto linear = growth_evidence({1, 2, 3, 4, 5, 6, 7, 8});
  CHECK(linear.fitted_degree == 1);
  CHECK_FALSE(growth_evidence({3, 2, 0}).all_positive);
}

TEST_CASE("pertinency and admissibility reports") {
  const auto p2 = pertinency_report(AlgebraContext(2));
  CHECK(p2.equals_n);
  CHECK(p2.hilbert.certified_zero_from == 2);
  const auto p3 = pertinency_report(AlgebraContext(3), 8);
  CHECK_FALSE(p3.equals_n);
  CHECK(p3.growth.all_positive);
  const auto a2 = admissibility_report(AlgebraContext(2));
  CHECK(a2.admissible);
  CHECK(a2.psi.size() == 2);
  CHECK_FALSE(admissibility_report(AlgebraContext(3), SearchBounds{4, 8, true}, false).admissible);
}

TEST_CASE("localized membership") {
  const AlgebraContext c4(4);
  const SearchStatus b1 = gamma_saturated_membership(c4, 2, b_element(c4, 1));
  CHECK(b1.found);
  CHECK(b1.exponent == 0);
  const SearchStatus c3 = gamma_saturated_membership(c4, 2, c_element(c4, 3));
  CHECK(c3.found);
  CHECK(c3.exponent == 1);
  CHECK(c3.witness->valid());
  CHECK_FALSE(gamma_saturated_membership(c4, 2, AlgElem::one(c4), {}, 0).found);
}

TEST_CASE("claim identities") {
  CHECK(verify_claim1(AlgebraContext(8), 4, 1, 1).holds);
  const auto c1 = verify_claim1(AlgebraContext(14), 7, 0, 1);
  CHECK(c1.holds);
  CHECK(c1.residual.is_zero());
  CHECK(c1.lhs == c1.rhs);
  CHECK_THROWS_AS(verify_claim1(AlgebraContext(8), 4, 2, 1), InvalidInput);
  CHECK(verify_claim3_even(AlgebraContext(8), 4).holds);
  CHECK_THROWS_AS(verify_claim3_even(AlgebraContext(14), 7), InvalidInput);
  CHECK_THROWS_AS(verify_claim3_odd(AlgebraContext(14), 5), InvalidInput);
  CHECK_THROWS_AS(verify_claim2(AlgebraContext(14), 6, 3, 1), InvalidInput);
}

TEST_CASE("subalgebra transfer") {
  const AlgebraContext c4(4);
  const TildeContext t = TildeContext::make(c4, 2);
  CHECK(t.q == 2);
  CHECK(t.generators.size() == 2);
  // [b_1, b_1] = c_2 but [b_0, b_0] = c_0 in A_4, so the relation with
  // indices taken mod m fails; the report keeps the failure visible.
  CHECK_FALSE(t.relations_hold());
  const TildeReport r = tilde_inclusion_check(c4, 2, 3);
  CHECK(r.all_found());
  CHECK(r.entries.size() == 9);
  for (const auto& e : r.entries) CHECK(e.status.exponent == 0);
  const TildeReport r6 = tilde_inclusion_check(AlgebraContext(6), 2, 2);
  CHECK(r6.all_found());
  for (const auto& e : r6.entries) CHECK(e.status.exponent <= 3);
  CHECK_THROWS_AS(TildeContext::make(c4, 3), InvalidInput);
}
