// Monomials, descending-lex enumeration and rank/unrank, lex (co)segments,
// exchange sets, and monomial subspaces.

#include <catch2/catch_amalgamated.hpp>

#include "gitworst/monomial.hpp"

using namespace gitworst;

TEST_CASE("monomial basics") {
  Monomial m = Monomial::parse("x0^3*x1", 2);
  CHECK(m.degree() == 4);
  CHECK(m.exp(0) == 3);
  CHECK(m.exp(1) == 1);
  CHECK(m.exp(2) == 0);
  CHECK(m.str() == "x0^3*x1");
  CHECK(Monomial::one(2).str() == "1");
  CHECK(Monomial::parse("1", 3) == Monomial::one(3));
  CHECK(Monomial::power(2, 1, 4).str() == "x1^4");
  // Repeated factors accumulate.
  CHECK(Monomial::parse("x1*x1*x0", 2) == Monomial::parse("x0*x1^2", 2));
  CHECK_THROWS_AS(Monomial::parse("x3", 2), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("y0", 2), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("x0^0", 2), std::invalid_argument);
  CHECK_THROWS_AS(Monomial::parse("", 2), std::invalid_argument);
}

TEST_CASE("monomial divisibility and arithmetic") {
  Monomial a = Monomial::parse("x0^2*x1", 2);
  Monomial b = Monomial::parse("x0", 2);
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK(a.times(b) == Monomial::parse("x0^3*x1", 2));
  CHECK(a.quotient(b) == Monomial::parse("x0*x1", 2));
  CHECK_THROWS_AS(b.quotient(a), std::invalid_argument);
  CHECK(a.with_exp(2, 5) == Monomial::parse("x0^2*x1*x2^5", 2));
  // permuted: position i receives the exponent of x_{perm[i]}.
  CHECK(a.permuted({2, 0, 1}) == Monomial::parse("x1^2*x2", 2));
  CHECK(Monomial::parse("x0*x1^2", 1).embedded() == Monomial::parse("x1*x2^2", 2));
}

TEST_CASE("ordering puts the pure x0 power first") {
  CHECK(Monomial::parse("x0^3", 2) > Monomial::parse("x0^2*x1", 2));
  CHECK(Monomial::parse("x0^2*x1", 2) > Monomial::parse("x0^2*x2", 2));
  CHECK(Monomial::parse("x2^3", 2) < Monomial::parse("x1*x2^2", 2));
}

TEST_CASE("enumeration is complete, sorted, and counted by the binomial") {
  for (int r = 1; r <= 3; ++r)
    for (int d = 0; d <= 5; ++d) {
      std::vector<Monomial> all = enumerate_monomials(r, d);
      CHECK(Int(static_cast<long long>(all.size())) == monomial_count(r, d));
      CHECK(std::is_sorted(all.begin(), all.end(),
                           [](const Monomial& a, const Monomial& b) { return a > b; }));
      for (const Monomial& m : all) CHECK(m.degree() == d);
    }
  CHECK(monomial_count(2, 3) == 10);
  CHECK(monomial_count(3, 4) == 35);
}

TEST_CASE("rank and unrank invert each other") {
  for (int r = 1; r <= 3; ++r)
    for (int d = 1; d <= 5; ++d) {
      std::vector<Monomial> all = enumerate_monomials(r, d);
      for (size_t i = 0; i < all.size(); ++i) {
        CHECK(monomial_rank(all[i]) == static_cast<long long>(i) + 1);
        CHECK(monomial_unrank(r, d, static_cast<long long>(i) + 1) == all[i]);
      }
    }
  CHECK_THROWS_AS(monomial_unrank(2, 3, 0), std::out_of_range);
  CHECK_THROWS_AS(monomial_unrank(2, 3, 11), std::out_of_range);
}

TEST_CASE("subspace construction sorts, deduplicates by throwing, validates") {
  MonomialSubspace W = MonomialSubspace::parse("x1^3, x0^3, x0*x1*x2", 2, 3);
  CHECK(W.dim() == 3);
  CHECK(W.members().front() == Monomial::parse("x0^3", 2));  // descending order
  CHECK(W.str() == "x0^3,x0*x1*x2,x1^3");
  CHECK(W.contains(Monomial::parse("x1^3", 2)));
  CHECK_FALSE(W.contains(Monomial::parse("x2^3", 2)));
  CHECK_THROWS_AS(MonomialSubspace::parse("x0^3,x0^3", 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(MonomialSubspace::parse("x0^2", 2, 3), std::invalid_argument);
  // Round trip.
  CHECK(MonomialSubspace::parse(W.str(), 2, 3) == W);
}

TEST_CASE("complement partitions the degree piece") {
  MonomialSubspace W = lex_segment(2, 3, 4);
  MonomialSubspace C = W.complement();
  CHECK(C.dim() == 6);
  CHECK(C.complement() == W);
  for (const Monomial& m : enumerate_monomials(2, 3))
    CHECK((W.contains(m) != C.contains(m)));
}

TEST_CASE("segment plus cosegment is everything") {
  for (long long t = 0; t <= 10; ++t) {
    MonomialSubspace seg = lex_segment(2, 3, t);
    MonomialSubspace coseg = lex_cosegment(2, 3, t);
    CHECK(seg.dim() == t);
    CHECK(coseg.dim() == 10 - t);
    CHECK(seg.complement() == coseg);
  }
  CHECK(lex_segment(2, 3, 3).str() == "x0^3,x0^2*x1,x0^2*x2");
  CHECK_THROWS_AS(lex_segment(2, 3, 11), std::out_of_range);
}

TEST_CASE("subspace transforms") {
  MonomialSubspace W = MonomialSubspace::parse("x0^2,x0*x1", 2, 2);
  CHECK(W.permuted({1, 0, 2}) == MonomialSubspace::parse("x1^2,x0*x1", 2, 2));
  CHECK(W.scaled(Monomial::power(2, 2, 1)) ==
        MonomialSubspace::parse("x0^2*x2,x0*x1*x2", 2, 3));
  MonomialSubspace sub = MonomialSubspace::parse("x0^2,x1^2", 1, 2);
  CHECK(sub.embedded() == MonomialSubspace::parse("x1^2,x2^2", 2, 2));
  CHECK(W.unified(MonomialSubspace::parse("x1^2", 2, 2)).dim() == 3);
  CHECK_THROWS_AS(W.unified(W), std::invalid_argument);  // duplicates
}

TEST_CASE("exchange set fixes all exponents except the chosen one") {
  // n = x0*x1^2: U_0 frees the x0 exponent under the degree budget.
  Monomial n = Monomial::parse("x0*x1^2", 2);
  MonomialSubspace u0 = u_set(0, n);
  CHECK(u0.contains(Monomial::parse("x0^3", 2)));
  CHECK(u0.contains(Monomial::parse("x0^2*x1", 2)));
  CHECK(u0.contains(Monomial::parse("x0*x1^2", 2)));
  CHECK_FALSE(u0.contains(Monomial::parse("x0*x1*x2", 2)));  // x2 exceeds its cap
  const MonomialSubspace u1 = u_set(1, n);
  for (const Monomial& v : u1.members()) {
    CHECK(v.exp(0) <= 1);
    CHECK(v.exp(2) <= 0);
  }
  CHECK(u_set(2, n).dim() == 6);  // x0 <= 1 and x1 <= 2, x2 free: six fillings
}

TEST_CASE("permutation list is the full symmetric group") {
  CHECK(permutations(3).size() == 6);
  CHECK(permutations(4).size() == 24);
  CHECK(permutations(1) == std::vector<std::vector<int>>{{0}});
}
