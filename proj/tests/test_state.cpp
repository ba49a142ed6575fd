// State vectors, center distances, weight pairings, and adapted directions.

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gitworst/state.hpp"

using namespace gitworst;

TEST_CASE("state vector of a known subspace") {
  MonomialSubspace W = MonomialSubspace::parse("x0^3,x0^2*x1,x0^2*x2", 2, 3);
  StateVector s = state_vector(W);
  CHECK(s.coords == std::vector<Int>{7, 1, 1});
  CHECK(s.norm_sq() == 51);
  CHECK(s.dist0_sq() == Rat(24));  // 51 - 81/3
  std::optional<OnePS> lam = adapted_one_ps(W);
  REQUIRE(lam.has_value());
  CHECK(lam->weights == std::vector<Int>{2, -1, -1});
}

TEST_CASE("center distance agrees with the direct sum of squares") {
  // Independent oracle: |c - db/(r+1) * 1|^2 computed coordinate by
  // coordinate in exact rationals.
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 3);
    const int d = 1 + static_cast<int>(rng() % 5);
    std::vector<Monomial> all = enumerate_monomials(r, d);
    std::shuffle(all.begin(), all.end(), rng);
    const size_t b = rng() % (all.size() + 1);
    all.resize(b, Monomial::one(r));
    MonomialSubspace W(r, d, std::move(all));
    StateVector s = state_vector(W);
    Rat center = Rat(Int(d) * Int(static_cast<long long>(b))) / (r + 1);
    Rat direct = 0;
    for (const Int& c : s.coords) direct += (Rat(c) - center) * (Rat(c) - center);
    CHECK(s.dist0_sq() == direct);
  }
}

TEST_CASE("complementary states fill the uniform total") {
  // c(W) + c(complement) is d * C(r+d, r) / (r+1) in every coordinate.
  for (int r = 1; r <= 3; ++r)
    for (int d = 1; d <= 4; ++d) {
      MonomialSubspace W = lex_segment(r, d, to_ll(monomial_count(r, d)) / 2);
      StateVector a = state_vector(W);
      StateVector b = state_vector(W.complement());
      for (int i = 0; i <= r; ++i)
        CHECK(Int(r + 1) * (a.coords[i] + b.coords[i]) == Int(d) * monomial_count(r, d));
    }
}

TEST_CASE("pairing is the weighted coordinate sum") {
  StateVector s = state_vector(MonomialSubspace::parse("x0^3,x1^3", 2, 3));
  CHECK(s.coords == std::vector<Int>{3, 3, 0});
  CHECK(pairing(OnePS{{1, 1, 1}}, s) == 6);
  CHECK(pairing(OnePS{{2, -1, -1}}, s) == 3);
  CHECK_THROWS_AS(pairing(OnePS{{1, 1}}, s), std::invalid_argument);
}

TEST_CASE("adapted direction is primitive and proportional to the offset") {
  MonomialSubspace W = lex_segment(2, 4, 6);
  StateVector s = state_vector(W);
  std::optional<OnePS> lam = adapted_one_ps(s);
  REQUIRE(lam.has_value());
  Int g = 0;
  Int cross = 0;
  for (size_t i = 0; i < lam->weights.size(); ++i) {
    g = boost::multiprecision::gcd(g, lam->weights[i]);
    // Proportionality: (r+1) c_i - db must be a fixed positive multiple.
    Int offset = Int(s.r + 1) * s.coords[i] - Int(s.d) * s.b;
    if (cross == 0 && lam->weights[i] != 0) cross = offset / lam->weights[i];
    CHECK(offset == cross * lam->weights[i]);
  }
  CHECK(g == 1);
  CHECK(cross > 0);
}

TEST_CASE("balanced subspaces have no adapted direction") {
  // The full degree piece is centered.
  MonomialSubspace full = lex_segment(2, 3, 10);
  CHECK_FALSE(adapted_one_ps(full).has_value());
  // So is the empty subspace.
  CHECK_FALSE(adapted_one_ps(lex_segment(2, 3, 0)).has_value());
  // A symmetric orbit sum: the three cube powers.
  CHECK_FALSE(adapted_one_ps(MonomialSubspace::parse("x0^3,x1^3,x2^3", 2, 3)).has_value());
}
