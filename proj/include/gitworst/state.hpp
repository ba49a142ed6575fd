#pragma once

// State vectors of monomial subspaces: the per-variable exponent totals
// c^W, their squared norm, the exact squared distance from the center
// xi = (db/(r+1), ..., db/(r+1)) of the weight simplex, and the primitive
// integer one-parameter subgroup adapted to W.

#include <optional>
#include <vector>

#include "gitworst/arith.hpp"
#include "gitworst/monomial.hpp"

namespace gitworst {

struct StateVector {
  int r = 0;
  long long d = 0;  // common degree of the members
  long long b = 0;  // number of members
  std::vector<Int> coords;

  Int norm_sq() const {
    Int s = 0;
    for (const Int& c : coords) s += c * c;
    return s;
  }

  /// |c - xi|^2 = |c|^2 - (db)^2/(r+1), exact.
  Rat dist0_sq() const {
    Int db = Int(d) * b;
    return Rat(norm_sq()) - Rat(db * db) / (r + 1);
  }

  friend bool operator==(const StateVector& x, const StateVector& y) {
    return x.r == y.r && x.d == y.d && x.b == y.b && x.coords == y.coords;
  }
};

inline StateVector state_vector(const MonomialSubspace& W) {
  StateVector s;
  s.r = W.r();
  s.d = W.degree();
  s.b = W.dim();
  s.coords.assign(W.r() + 1, 0);
  for (const Monomial& m : W.members())
    for (int i = 0; i <= W.r(); ++i) s.coords[i] += m.exp(i);
  return s;
}

/// An integer weight vector for the torus, acting on x_i with weight
/// weights[i].
struct OnePS {
  std::vector<Int> weights;

  friend bool operator==(const OnePS& x, const OnePS& y) { return x.weights == y.weights; }
};

inline Int pairing(const OnePS& lambda, const StateVector& s) {
  if (lambda.weights.size() != s.coords.size())
    throw std::invalid_argument("weight/state length mismatch");
  Int out = 0;
  for (size_t i = 0; i < s.coords.size(); ++i) out += lambda.weights[i] * s.coords[i];
  return out;
}

/// The primitive integer vector pointing from the simplex center to the
/// state, i.e. (r+1)c - db * (1,...,1) divided by the gcd of its entries.
/// Absent when the state sits exactly at the center.
inline std::optional<OnePS> adapted_one_ps(const StateVector& s) {
  std::vector<Int> w(s.coords.size());
  const Int shift = Int(s.d) * s.b;
  Int g = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    w[i] = Int(s.r + 1) * s.coords[i] - shift;
    g = boost::multiprecision::gcd(g, w[i]);
  }
  if (g == 0) return std::nullopt;
  for (Int& x : w) x /= g;
  return OnePS{std::move(w)};
}

inline std::optional<OnePS> adapted_one_ps(const MonomialSubspace& W) {
  return adapted_one_ps(state_vector(W));
}

}  // namespace gitworst
