// Monomial ideals: minimal generators, slices and Hilbert functions,
// saturation, Borel-fixedness, lex ideals of polynomial specs, membership
// tests, and regularity reports.

#include <catch2/catch_amalgamated.hpp>

#include "gitworst/ideal.hpp"

using namespace gitworst;

TEST_CASE("construction keeps only minimal generators") {
  MonomialIdeal I = MonomialIdeal::parse("x0^2, x0^3, x0*x1, x0^2*x1^5", 2);
  CHECK(I.generators().size() == 2);
  CHECK(I.str() == "x0^2,x0*x1");
  CHECK(I.contains(Monomial::parse("x0^2*x2^4", 2)));
  CHECK_FALSE(I.contains(Monomial::parse("x0*x2^5", 2)));
  CHECK(I.max_generator_degree() == 2);
  CHECK(MonomialIdeal::zero(2).is_zero());
  CHECK(MonomialIdeal::unit(2).contains(Monomial::one(2)));
  CHECK(MonomialIdeal::parse(I.str(), 2) == I);
  // Newline-separated generator lists parse too.
  CHECK(MonomialIdeal::parse("x0^2\nx0*x1\n", 2) == I);
}

TEST_CASE("degree slices and quotient Hilbert function") {
  MonomialIdeal I = MonomialIdeal::parse("x1^2, x1*x2, x2^2", 2);
  // The quotient has basis x0^d, x0^{d-1} x1, x0^{d-1} x2 in every degree
  // d >= 1: three independent directions.
  for (int d = 2; d <= 6; ++d) {
    CHECK(I.hilbert_function_quotient(d) == 3);
    CHECK(I.slice_dim(d) == monomial_count(2, d) - 3);
  }
  CHECK(I.hilbert_function_quotient(1) == 3);
  CHECK(I.hilbert_function_quotient(0) == 1);
  // The degree-2 slice is exactly the generators.
  CHECK(I.degree_slice(2) == MonomialSubspace::parse("x1^2,x1*x2,x2^2", 2, 2));
}

TEST_CASE("variable colon drops one variable from the generators") {
  MonomialIdeal I = MonomialIdeal::parse("x0^2*x1, x2^3", 2);
  CHECK(I.colon_var_infty(0) == MonomialIdeal::parse("x1, x2^3", 2));
  CHECK(I.colon_var_infty(2) == MonomialIdeal::unit(2));
}

TEST_CASE("intersection via pairwise least common multiples") {
  MonomialIdeal A = MonomialIdeal::parse("x0", 2);
  MonomialIdeal B = MonomialIdeal::parse("x0^2, x0*x1", 2);
  CHECK(A.intersect(B) == B);
  CHECK(A.intersect(MonomialIdeal::parse("x1", 2)) == MonomialIdeal::parse("x0*x1", 2));
}

TEST_CASE("saturation removes the irrelevant component and is idempotent") {
  // x0 * (x0, x1) saturates to itself: x0*x2^k never enters the ideal.
  MonomialIdeal I = MonomialIdeal::parse("x0^2, x0*x1", 2);
  CHECK(I.saturation() == I);
  // A single-degree worst subspace saturates to the three quadrics.
  MonomialIdeal J = MonomialIdeal::from_subspace(lex_cosegment(2, 3, 3));
  CHECK(J.saturation() == MonomialIdeal::parse("x1^2, x1*x2, x2^2", 2));
  CHECK(J.saturation().saturation() == J.saturation());
  // Containing a power of every variable means saturating to the unit ideal.
  CHECK(MonomialIdeal::parse("x0^2, x1^3, x2", 2).saturation() == MonomialIdeal::unit(2));
}

TEST_CASE("Borel-fixedness under adjacent exchanges") {
  CHECK(MonomialIdeal::parse("x0", 2).is_borel_fixed());
  CHECK(MonomialIdeal::parse("x0^2, x0*x1, x1^3", 2).is_borel_fixed());
  // x1^2 alone is not fixed: the exchange toward x0 leaves the ideal.
  CHECK_FALSE(MonomialIdeal::parse("x1^2", 2).is_borel_fixed());
  CHECK(MonomialIdeal::parse("x1^2", 2).permuted({1, 0, 2}).is_borel_fixed());

  // The subspace-level check agrees with the ideal-level one on slices.
  MonomialSubspace W = lex_segment(2, 3, 6);
  CHECK(is_borel_fixed(W));
  CHECK(MonomialIdeal::from_subspace(W).is_borel_fixed());
  MonomialSubspace notB = MonomialSubspace::parse("x1^3,x2^3", 2, 3);
  CHECK_FALSE(is_borel_fixed(notB));
  std::optional<std::vector<int>> perm = borel_fixing_permutation(notB);
  CHECK_FALSE(perm.has_value());  // no relabeling fixes a two-corner set
  CHECK(borel_fixing_permutation(MonomialSubspace::parse("x1^3,x1^2*x2", 2, 3)).has_value());
}

TEST_CASE("regularity shortcut requires Borel-fixedness") {
  CHECK(MonomialIdeal::parse("x0^2, x0*x1, x1^3", 2).regularity_borel() == 3);
  CHECK_THROWS_AS(MonomialIdeal::parse("x1^2", 2).regularity_borel(), std::invalid_argument);
  CHECK_THROWS_AS(MonomialIdeal::zero(2).regularity_borel(), std::invalid_argument);
}

TEST_CASE("lex ideal of a spec cuts lex segments of the right size") {
  std::vector<std::pair<std::string, int>> rows = {
      {"goodsit:1,0", 2}, {"goodsit:1,1", 2}, {"goodsit:2,1", 2},
      {"const:3", 2},     {"goodsit:1,2", 3}};
  for (const auto& [text, r] : rows) {
    HilbertPolySpec spec = HilbertPolySpec::parse(text, r);
    MonomialIdeal L = lex_ideal(spec);
    CAPTURE(text, r);
    for (long long d = spec.gotzmann_number(); d <= spec.gotzmann_number() + 3; ++d) {
      CHECK(L.slice_dim(static_cast<int>(d)) == spec.Q(d));
      CHECK(L.degree_slice(static_cast<int>(d)) ==
            lex_segment(r, static_cast<int>(d), to_ll(spec.Q(d))));
    }
    // Lex ideals are Borel-fixed with regularity the decomposition length.
    CHECK(L.is_borel_fixed());
    CHECK(L.regularity_borel() == spec.gotzmann_number());
  }
  CHECK(lex_ideal(HilbertPolySpec::goodsit(2, 1, 1)) == MonomialIdeal::parse("x0^2, x0*x1", 2));
  CHECK(lex_ideal(HilbertPolySpec::goodsit(2, 1, 0)) == MonomialIdeal::parse("x0", 2));
  CHECK(lex_ideal(HilbertPolySpec::goodsit(2, 2, 0)) == MonomialIdeal::parse("x0^2", 2));
}

TEST_CASE("dimension-growth membership test") {
  HilbertPolySpec c3 = HilbertPolySpec::constant(2, 3);
  // The tail cosegment persists.
  PersistenceReport ok = persistence_check(lex_cosegment(2, 3, 3), c3);
  CHECK(ok.pass);
  CHECK(ok.dim == 7);
  CHECK(ok.grownDim == 12);
  // A scattered subspace of the right dimension grows too fast.
  MonomialSubspace bad = MonomialSubspace::parse(
      "x0^3,x1^3,x2^3,x0^2*x1,x1^2*x2,x0*x2^2,x0*x1*x2", 2, 3);
  PersistenceReport fail = persistence_check(bad, c3);
  CHECK_FALSE(fail.pass);
  CHECK(fail.dim == 7);
  CHECK(fail.expectedDim == 7);
  CHECK(fail.grownDim == 15);
  CHECK(fail.expectedGrownDim == 12);
  // Wrong dimension fails outright.
  CHECK_FALSE(persistence_check(lex_cosegment(2, 3, 4), c3).pass);
  CHECK_THROWS_AS(persistence_check(lex_cosegment(2, 2, 3), c3), std::invalid_argument);
}

TEST_CASE("divisor and exchange membership test") {
  HilbertPolySpec g10 = HilbertPolySpec::goodsit(2, 1, 0);
  // The full multiple of x0 is a member: common divisor x0, exchanges avoid.
  MuraiReport pass = murai_check(lex_segment(2, 3, 6), g10);
  CHECK(pass.pass);
  CHECK(pass.divisorOk);
  REQUIRE(pass.commonDivisor.has_value());
  CHECK(pass.commonDivisor->str() == "x0");
  CHECK(pass.exchangeOk);

  // A norm maximizer of the plain subspace search has no common divisor.
  MonomialSubspace noDiv = MonomialSubspace::parse(
      "x0^3,x0^2*x1,x0^2*x2,x0*x1^2,x0*x1*x2,x1^3", 2, 3);
  MuraiReport fail = murai_check(noDiv, g10);
  CHECK_FALSE(fail.pass);
  CHECK_FALSE(fail.divisorOk);
  CHECK(fail.exchangeOk);

  // A scattered subspace fails on the exchange side instead.
  HilbertPolySpec c3 = HilbertPolySpec::constant(2, 3);
  MonomialSubspace scattered = MonomialSubspace::parse(
      "x0^3,x1^3,x2^3,x0^2*x1,x1^2*x2,x0*x2^2,x0*x1*x2", 2, 3);
  MuraiReport fail2 = murai_check(scattered, c3);
  CHECK_FALSE(fail2.pass);
  CHECK(fail2.divisorOk);  // gamma = 0 asks for nothing
  CHECK_FALSE(fail2.exchangeOk);
  REQUIRE(fail2.firstFailure.has_value());
  CHECK(fail2.firstFailure->str() == "x0^2*x2");
}

TEST_CASE("regularity report saturates and searches for a Borel frame") {
  MonomialIdeal I = MonomialIdeal::from_subspace(lex_cosegment(2, 3, 3));
  RegularityReport rep = regularity_report(I);
  CHECK_FALSE(rep.inputSaturated);
  CHECK(rep.saturated == MonomialIdeal::parse("x1^2, x1*x2, x2^2", 2));
  REQUIRE(rep.borelPerm.has_value());
  CHECK(rep.regularity == 2);

  RegularityReport sat = regularity_report(MonomialIdeal::parse("x0^2, x0*x1", 2));
  CHECK(sat.inputSaturated);
  CHECK(sat.regularity == 2);

  RegularityReport zero = regularity_report(MonomialIdeal::zero(2));
  CHECK(zero.inputSaturated);
  CHECK_FALSE(zero.regularity.has_value());
}
