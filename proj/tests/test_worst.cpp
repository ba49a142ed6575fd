// Exhaustive searches, closed-form constructions, the routing between them,
// and the duality / window-stability verifiers.

#include <catch2/catch_amalgamated.hpp>

#include "gitworst/worst.hpp"

using namespace gitworst;

TEST_CASE("exhaustive search over three-element subspaces of the cubics") {
  WorstReport rep = brute_force_Z(2, 3, 3);
  CHECK(rep.method == "brute");
  CHECK(rep.maxNormSq == 51);
  CHECK(rep.dist0Sq == Rat(24));
  REQUIRE(rep.maximizers.size() == 3);
  CHECK(rep.maximizers.front() == MonomialSubspace::parse("x0^3,x0^2*x1,x0^2*x2", 2, 3));
  // The three winners form one coordinate-permutation orbit.
  CHECK(rep.orbitRepresentatives.size() == 1);
  for (size_t i = 0; i < rep.maximizers.size(); ++i) {
    REQUIRE(rep.adapted[i].has_value());
    Int top = 0;
    for (const Int& w : rep.adapted[i]->weights) top = std::max(top, w);
    CHECK(top == 2);  // each winner is adapted to a (2,-1,-1)-type direction
  }
  // The exact prune keeps the leaf count tiny.
  CHECK(rep.searchedCount <= 120);
}

TEST_CASE("search refuses up front when the subset count exceeds the budget") {
  try {
    brute_force_Z(2, 3, 5, 10);
    FAIL("expected a refusal");
  } catch (const BudgetExceeded& e) {
    CHECK(e.count() == 252);
    CHECK(e.budget() == 10);
  }
  // Dimensions beyond the ambient count are rejected outright.
  CHECK_THROWS_AS(brute_force_Z(2, 3, 11), std::invalid_argument);
}

TEST_CASE("duality between complementary dimensions") {
  for (long long b : {0LL, 1LL, 3LL, 5LL}) CHECK(verify_duality(2, 3, b));
  CHECK(verify_duality(1, 5, 2));
  CHECK(verify_duality(3, 2, 4));
}

TEST_CASE("membership-filtered search tracks the unrestricted maximum") {
  HilbertPolySpec g10 = HilbertPolySpec::goodsit(2, 1, 0);
  WorstReport rep = brute_force_X(2, g10, 3);
  CHECK(rep.b == 6);
  REQUIRE(rep.maximizers.size() == 3);
  CHECK(rep.maxNormSq == 132);
  // The plain search does better on a subspace that is not a member.
  CHECK(rep.unrestrictedMaxNormSq == 134);
  CHECK(rep.orbitRepresentatives.size() == 1);
  for (bool ok : rep.persistenceOk) CHECK(ok);
  for (bool ok : rep.borelOk) CHECK(ok);
}

TEST_CASE("constant construction matches the filtered search") {
  WorstReport built = construct_constant(2, 3, 3);
  CHECK(built.method == "construct");
  REQUIRE(built.maximizers.size() == 1);
  CHECK(built.maximizers.front() == lex_cosegment(2, 3, 3));
  CHECK(built.maxNormSq == 171);
  CHECK(built.persistenceOk == std::vector<bool>{true});
  CHECK(built.borelOk == std::vector<bool>{true});
  CHECK(built.pointSupportOk == std::vector<bool>{true});
  CHECK(built.windowCertified == false);  // degree 3 sits below the certified window

  WorstReport searched = brute_force_X(2, HilbertPolySpec::constant(2, 3), 3);
  CHECK(built.orbitRepresentatives == searched.orbitRepresentatives);
}

TEST_CASE("hypersurface-plus-points construction against the filtered search") {
  WorstReport built = construct_goodsit(2, 1, 1, 4);
  REQUIRE(built.maximizers.size() == 2);
  CHECK(built.maxNormSq == 510);
  CHECK(built.dist0Sq == Rat(78));
  REQUIRE(built.decompositions.size() == 2);
  CHECK(built.decompositions[0].z0.dim() == 10);  // x0 times the full cubics
  CHECK(built.decompositions[0].z1.dim() == 3);
  CHECK(built.decompositions[0].P0.canonical_text() == "goodsit:1,0");
  CHECK(built.decompositions[0].P1.canonical_text() == "const:1");
  for (bool ok : built.persistenceOk) CHECK(ok);
  for (bool ok : built.borelOk) CHECK(ok);
  // Every constructed winner shows up in the exhaustive filtered search.
  WorstReport searched = brute_force_X(2, HilbertPolySpec::goodsit(2, 1, 1), 4);
  CHECK(searched.maxNormSq == 510);
  for (const MonomialSubspace& W : built.maximizers)
    CHECK(std::find(searched.maximizers.begin(), searched.maximizers.end(), W) !=
          searched.maximizers.end());
}

TEST_CASE("pure hypersurface construction is the cone over the full slice") {
  WorstReport built = construct_goodsit(2, 1, 0, 3);
  REQUIRE(built.maximizers.size() == 1);
  CHECK(built.maximizers.front() == lex_segment(2, 3, 6));
  CHECK(built.maxNormSq == 132);
  WorstReport searched = brute_force_X(2, HilbertPolySpec::goodsit(2, 1, 0), 3);
  CHECK(built.orbitRepresentatives == searched.orbitRepresentatives);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(construct_goodsit(2, 0, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(construct_goodsit(1, 1, 0, 5), UnsupportedDimension);
  CHECK_THROWS_AS(construct_constant(2, 0, 5), std::invalid_argument);
  // Degree below the decomposition length.
  CHECK_THROWS_AS(construct_constant(2, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(construct_goodsit(2, 2, 1, 2), std::invalid_argument);
}

TEST_CASE("grassmannian closed form closes up under permutations") {
  // Complement size 3 <= degree: the closed form applies and must equal the
  // exhaustive answer, including all coordinate images.
  WorstReport built = worst_Z_construct(2, 3, 7);
  WorstReport searched = brute_force_Z(2, 3, 7);
  CHECK(built.maximizers == searched.maximizers);
  CHECK(built.maxNormSq == searched.maxNormSq);
  CHECK(built.orbitRepresentatives == searched.orbitRepresentatives);
}

TEST_CASE("router prefers brute force and falls back to the closed form") {
  WorstReport direct = brute_force_Z(2, 9, 52);
  WorstReport routed = worst_Z(2, 9, 52, 1000);  // budget forces the fallback
  CHECK(routed.method == "construct");
  CHECK(direct.method == "brute");
  CHECK(routed.maximizers == direct.maximizers);
  CHECK(routed.maxNormSq == direct.maxNormSq);
  // Within budget the router just runs the search.
  CHECK(worst_Z(2, 3, 3).method == "brute");
  // No closed form when the complement exceeds the degree: the refusal stands.
  CHECK_THROWS_AS(worst_Z(3, 6, 40, 10), BudgetExceeded);
}

TEST_CASE("saturated worst ideals do not move across the stable window") {
  CHECK(stability_window_check(2, 1, 1, 3, 6));
  CHECK(stability_window_check(2, 0, 3, 3, 5));
  CHECK_THROWS_AS(stability_window_check(2, 1, 1, 5, 4), std::invalid_argument);
}
