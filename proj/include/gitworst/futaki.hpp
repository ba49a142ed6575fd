#pragma once

// Normalized pairing values of one-parameter subgroups against quotient
// slices of a monomial ideal, and their exact expansion A0 + A1/d + o(1/d)
// obtained by interpolating the numerator and denominator as polynomials in
// the degree.  The sign of A1 along the distinguished direction detects
// destabilization.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gitworst/hilbert.hpp"
#include "gitworst/ideal.hpp"
#include "gitworst/state.hpp"

namespace gitworst {

/// <lambda, state of the complement of the degree-d slice> / (d * dim of the
/// degree-d quotient).  Requires d at or above every generator degree so the
/// slice dimensions agree with the Hilbert polynomial regime.
inline Rat futaki_value(const MonomialIdeal& I, const OnePS& lambda, long long d) {
  if (static_cast<int>(lambda.weights.size()) != I.r() + 1)
    throw std::invalid_argument("weight vector has the wrong length");
  if (d < 1 || d < I.max_generator_degree())
    throw std::invalid_argument("degree below the generator degrees of the ideal");
  const Int P = I.hilbert_function_quotient(static_cast<int>(d));
  if (P == 0) throw std::domain_error("quotient vanishes in degree " + std::to_string(d));
  const MonomialSubspace comp = I.degree_slice(static_cast<int>(d)).complement();
  return Rat(pairing(lambda, state_vector(comp))) / Rat(Int(d) * P);
}

struct FutakiExpansion {
  OnePS lambda;
  Rat A0 = 0;
  Rat A1 = 0;
  Polynomial numerator;    // pairing against the quotient state, as a polynomial in d
  Polynomial denominator;  // d times the quotient Hilbert polynomial
  long long dMin = 0;      // first sampled degree
  long long dMax = 0;      // last sampled degree (includes the validation points)
};

/// Interpolate the pairing numerator and the quotient Hilbert function from
/// r + 3 consecutive degrees starting at dMin, validate both at two held-out
/// degrees, and extract the first two coefficients of the large-d expansion.
inline FutakiExpansion futaki_expansion(const MonomialIdeal& I, const OnePS& lambda,
                                        long long dMin) {
  const int r = I.r();
  if (static_cast<int>(lambda.weights.size()) != r + 1)
    throw std::invalid_argument("weight vector has the wrong length");
  if (dMin < 1 || dMin < I.max_generator_degree())
    throw std::invalid_argument("sampling must start at or above the generator degrees");

  const long long nSamples = r + 3;
  const long long dMax = dMin + nSamples + 1;  // two extra validation degrees
  std::vector<std::pair<long long, Rat>> numPts, quotPts;
  for (long long d = dMin; d < dMin + nSamples; ++d) {
    const Int P = I.hilbert_function_quotient(static_cast<int>(d));
    const MonomialSubspace comp = I.degree_slice(static_cast<int>(d)).complement();
    numPts.emplace_back(d, Rat(pairing(lambda, state_vector(comp))));
    quotPts.emplace_back(d, Rat(P));
  }
  Polynomial N = interpolate(numPts);
  Polynomial quot = interpolate(quotPts);
  for (long long d = dMin + nSamples; d <= dMax; ++d) {
    const Int P = I.hilbert_function_quotient(static_cast<int>(d));
    const MonomialSubspace comp = I.degree_slice(static_cast<int>(d)).complement();
    if (N.at(d) != Rat(pairing(lambda, state_vector(comp))) || quot.at(d) != Rat(P))
      throw std::domain_error("pairing is not eventually polynomial from degree " +
                              std::to_string(dMin));
  }
  if (quot.is_zero()) throw std::domain_error("quotient vanishes for large degrees");
  const Polynomial D = Polynomial::variable() * quot;

  FutakiExpansion out;
  out.lambda = lambda;
  out.numerator = N;
  out.denominator = D;
  out.dMin = dMin;
  out.dMax = dMax;
  if (N.degree() > D.degree())
    throw std::domain_error("pairing grows faster than the denominator; no finite limit");
  out.A0 = (N.degree() == D.degree()) ? N.leading() / D.leading() : Rat(0);
  const Polynomial R1 = N - D * out.A0;
  if (R1.degree() > D.degree() - 1) throw std::logic_error("first remainder too large");
  out.A1 = (R1.degree() == D.degree() - 1) ? R1.leading() / D.leading() : Rat(0);
  const Polynomial R2 = Polynomial::variable() * R1 - D * out.A1;
  if (R2.degree() > D.degree() - 1) throw std::logic_error("second remainder too large");
  return out;
}

struct KInstabilityReport {
  FutakiExpansion plus;   // along (r, -1, ..., -1)
  FutakiExpansion minus;  // along the negated direction
  bool destabilized = false;
};

/// Expand along the distinguished direction (r, -1, ..., -1) and its
/// negation; a strictly positive A1 either way flags destabilization.
inline KInstabilityReport k_instability_report(const MonomialIdeal& I, const HilbertPolySpec& spec,
                                               std::optional<long long> dMinOpt = std::nullopt) {
  if (I.r() != spec.r()) throw std::invalid_argument("ideal and spec ambient dimensions differ");
  const int r = I.r();
  long long dMin = dMinOpt.value_or(spec.gotzmann_number() + r + 2);
  dMin = std::max<long long>({dMin, 1, I.max_generator_degree()});
  OnePS lp;
  lp.weights.assign(static_cast<size_t>(r) + 1, Int(-1));
  lp.weights[0] = r;
  OnePS lm;
  for (const Int& w : lp.weights) lm.weights.push_back(-w);
  KInstabilityReport rep;
  rep.plus = futaki_expansion(I, lp, dMin);
  rep.minus = futaki_expansion(I, lm, dMin);
  rep.destabilized = rep.plus.A1 > 0 || rep.minus.A1 > 0;
  return rep;
}

}  // namespace gitworst
