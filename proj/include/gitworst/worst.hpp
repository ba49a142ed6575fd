#pragma once

// Worst unstable monomial subspaces: exhaustive branch-and-bound searches
// over b-subsets of the degree-d monomials (with and without the Hilbert
// scheme membership filter), the two closed-form constructions (constant
// quotient and hypersurface-plus-points quotient), a router that picks brute
// force or construction per budget, and the duality / window-stability
// verifiers built on them.

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gitworst/hilbert.hpp"
#include "gitworst/ideal.hpp"
#include "gitworst/monomial.hpp"
#include "gitworst/state.hpp"

namespace gitworst {

inline constexpr long long kDefaultBudget = 10'000'000;

/// Refusal to enumerate: the a-priori subset count exceeds the budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(Int count, long long budget)
      : std::runtime_error("enumeration of " + count.str() + " subsets exceeds the budget of " +
                           std::to_string(budget)),
        count_(std::move(count)),
        budget_(budget) {}
  const Int& count() const { return count_; }
  long long budget() const { return budget_; }

 private:
  Int count_;
  long long budget_;
};

/// Component decomposition of a hypersurface-plus-points worst subspace:
/// the gamma-fold hyperplane part and the residual finite part.
struct WorstDecomposition {
  MonomialSubspace z0;  // x0^gamma * (all of degree delta), as a degree-d subspace
  MonomialSubspace z1;  // the residual section W' (degree delta, x0-free)
  HilbertPolySpec P0;   // quotient polynomial of the hypersurface component
  HilbertPolySpec P1;   // constant residual polynomial
};

struct WorstReport {
  // Context.
  int r = 0;
  long long d = 0;
  long long b = 0;
  std::optional<std::string> specText;  // present for Hilbert-scheme searches
  std::string method;                   // "brute" | "construct"
  Int searchedCount = 0;

  // Results: all maximizers share maxNormSq (hence dist0Sq).
  Int maxNormSq = 0;
  Rat dist0Sq = 0;
  std::vector<MonomialSubspace> maximizers;            // canonical descending order
  std::vector<std::optional<OnePS>> adapted;           // aligned with maximizers
  std::vector<MonomialSubspace> orbitRepresentatives;  // dedup under coordinate permutations

  // Hilbert-scheme searches: best value ignoring the membership filter.
  std::optional<Int> unrestrictedMaxNormSq;

  // Construction routes.
  std::optional<bool> windowCertified;          // degree-d instance of the threshold chain
  std::vector<bool> persistenceOk;              // aligned with maximizers
  std::vector<bool> borelOk;                    // complement-free Borel check after relabeling
  std::vector<bool> pointSupportOk;             // constant construction: x_i^d in W for i >= 1
  std::vector<WorstDecomposition> decompositions;  // goodsit construction, aligned
};

namespace detail {

/// The canonical representative of the coordinate-permutation orbit: the
/// largest image under the subspace ordering.
inline MonomialSubspace orbit_representative(const MonomialSubspace& W) {
  MonomialSubspace best = W;
  for (const std::vector<int>& perm : permutations(W.r() + 1)) {
    MonomialSubspace cand = W.permuted(perm);
    if (best < cand) best = std::move(cand);
  }
  return best;
}

inline void sort_canonical(std::vector<MonomialSubspace>& ws) {
  std::sort(ws.begin(), ws.end(), [](const MonomialSubspace& a, const MonomialSubspace& b) { return b < a; });
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
}

/// Fill the derived per-maximizer fields (adapted directions, orbit
/// representatives) and the shared norm data.
inline void finalize_report(WorstReport& rep) {
  sort_canonical(rep.maximizers);
  rep.adapted.clear();
  std::vector<MonomialSubspace> reps;
  for (const MonomialSubspace& W : rep.maximizers) {
    rep.adapted.push_back(adapted_one_ps(W));
    reps.push_back(orbit_representative(W));
  }
  sort_canonical(reps);
  rep.orbitRepresentatives = std::move(reps);
  if (!rep.maximizers.empty()) {
    StateVector s = state_vector(rep.maximizers.front());
    rep.maxNormSq = s.norm_sq();
    rep.dist0Sq = s.dist0_sq();
    for (const MonomialSubspace& W : rep.maximizers)
      if (state_vector(W).norm_sq() != rep.maxNormSq)
        throw std::logic_error("maximizers disagree on the norm");
  }
}

/// Depth-first enumeration of b-subsets of the degree-d monomials in
/// descending lex order, with an exact prune: a subtree is skipped only when
/// even moving all remaining degree mass onto the largest coordinate stays
/// strictly below the caller's threshold, so ties always survive.
template <typename LeafFn, typename ThresholdFn>
void dfs_subsets(const std::vector<Monomial>& monos, int r, long long d, long long b,
                 LeafFn&& leaf, ThresholdFn&& threshold) {
  const long long n = static_cast<long long>(monos.size());
  if (d * b > 1'000'000'000LL) throw std::invalid_argument("degree mass too large for the engine");
  std::vector<long long> coords(r + 1, 0);
  std::vector<long long> chosen;
  chosen.reserve(static_cast<size_t>(b));
  auto rec = [&](auto&& self, long long idx, long long need) -> void {
    if (need == 0) {
      leaf(chosen, coords);
      return;
    }
    long long norm = 0, mx = 0;
    for (long long c : coords) {
      norm += c * c;
      mx = std::max(mx, c);
    }
    const long long mass = d * need;
    if (norm + 2 * mx * mass + mass * mass < threshold()) return;
    for (long long i = idx; n - i >= need; ++i) {
      for (int j = 0; j <= r; ++j) coords[j] += monos[static_cast<size_t>(i)].exp(j);
      chosen.push_back(i);
      self(self, i + 1, need - 1);
      chosen.pop_back();
      for (int j = 0; j <= r; ++j) coords[j] -= monos[static_cast<size_t>(i)].exp(j);
    }
  };
  rec(rec, 0, b);
}

inline void check_budget(int r, long long d, long long b, long long budget) {
  const Int N = monomial_count(r, d);
  if (b < 0 || Int(b) > N) throw std::invalid_argument("subspace dimension out of range");
  if (N > budget) throw BudgetExceeded(N, budget);
  const Int count = binom(to_ll(N), b);
  if (count > budget) throw BudgetExceeded(count, budget);
}

inline MonomialSubspace materialize(const std::vector<Monomial>& monos,
                                    const std::vector<long long>& chosen, int r, long long d) {
  std::vector<Monomial> ms;
  ms.reserve(chosen.size());
  for (long long i : chosen) ms.push_back(monos[static_cast<size_t>(i)]);
  return MonomialSubspace(r, static_cast<int>(d), std::move(ms));
}

inline bool borel_after_some_permutation(const MonomialSubspace& W) {
  return borel_fixing_permutation(W).has_value();
}

}  // namespace detail

/// Exhaustive maximization of the state norm over all b-subsets of the
/// degree-d monomials.  Refuses up front when C(C(r+d,r), b) exceeds budget.
inline WorstReport brute_force_Z(int r, long long d, long long b,
                                 long long budget = kDefaultBudget) {
  detail::check_budget(r, d, b, budget);
  const std::vector<Monomial> monos = enumerate_monomials(r, static_cast<int>(d));
  WorstReport rep;
  rep.r = r;
  rep.d = d;
  rep.b = b;
  rep.method = "brute";

  long long best = -1;
  long long searched = 0;
  std::vector<MonomialSubspace> found;
  detail::dfs_subsets(
      monos, r, d, b,
      [&](const std::vector<long long>& chosen, const std::vector<long long>& coords) {
        ++searched;
        long long norm = 0;
        for (long long c : coords) norm += c * c;
        if (norm > best) {
          best = norm;
          found.clear();
        }
        if (norm == best) found.push_back(detail::materialize(monos, chosen, r, d));
      },
      [&]() { return best; });
  rep.searchedCount = searched;
  rep.maximizers = std::move(found);
  detail::finalize_report(rep);
  return rep;
}

/// Exhaustive maximization over subspaces of dimension Q(d) restricted to
/// those passing the persistence membership test; also records the best
/// unrestricted value for comparison.
inline WorstReport brute_force_X(int r, const HilbertPolySpec& spec, long long d,
                                 long long budget = kDefaultBudget) {
  if (spec.r() != r) throw std::invalid_argument("spec has a different ambient dimension");
  if (d < spec.gotzmann_number())
    throw std::invalid_argument("search needs degree at or above the Gotzmann number");
  const long long b = to_ll(spec.Q(d));
  detail::check_budget(r, d, b, budget);
  const std::vector<Monomial> monos = enumerate_monomials(r, static_cast<int>(d));
  WorstReport rep;
  rep.r = r;
  rep.d = d;
  rep.b = b;
  rep.specText = spec.canonical_text();
  rep.method = "brute";

  long long bestMember = -1;    // best among persistence-passing subspaces
  long long bestAny = -1;       // best overall
  long long searched = 0;
  std::vector<MonomialSubspace> found;
  detail::dfs_subsets(
      monos, r, d, b,
      [&](const std::vector<long long>& chosen, const std::vector<long long>& coords) {
        ++searched;
        long long norm = 0;
        for (long long c : coords) norm += c * c;
        bestAny = std::max(bestAny, norm);
        if (norm < bestMember) return;
        MonomialSubspace W = detail::materialize(monos, chosen, r, d);
        if (!persistence_check(W, spec).pass) return;
        if (norm > bestMember) {
          bestMember = norm;
          found.clear();
        }
        found.push_back(std::move(W));
      },
      [&]() { return bestMember; });
  if (found.empty()) throw std::logic_error("no subspace passed the membership test");
  rep.searchedCount = searched;
  rep.maximizers = std::move(found);
  rep.unrestrictedMaxNormSq = Int(bestAny);
  detail::finalize_report(rep);
  rep.persistenceOk.assign(rep.maximizers.size(), true);
  for (const MonomialSubspace& W : rep.maximizers)
    rep.borelOk.push_back(detail::borel_after_some_permutation(W));
  return rep;
}

WorstReport worst_Z(int r, long long d, long long b, long long budget);

/// Closed form for a constant quotient of value c: the x0-power-translated
/// worst subspace of the coefficient subring glued onto the tail segment.
/// Emits the x0-normalized representatives only (one per sub-maximizer).
inline WorstReport construct_constant(int r, long long c, long long d,
                                      long long budget = kDefaultBudget) {
  if (c < 1) throw std::invalid_argument("constant construction needs a positive value");
  HilbertPolySpec spec = HilbertPolySpec::constant(r, c);
  if (d < spec.gotzmann_number())
    throw std::invalid_argument("construction needs degree at or above the Gotzmann number");
  const LERho le = l_e_rho(r, Int(c));
  if (le.l > d) throw std::invalid_argument("degree too small for the construction");
  WorstReport rep;
  rep.r = r;
  rep.d = d;
  rep.b = to_ll(spec.Q(d));
  rep.specText = spec.canonical_text();
  rep.method = "construct";
  rep.windowCertified = dp_conditions_hold(spec, d);

  const MonomialSubspace tail = lex_cosegment(r, static_cast<int>(d), to_ll(binom(r + le.l, r)));
  const Monomial shift = Monomial::power(r, 0, static_cast<int>(d - le.l));
  WorstReport sub = worst_Z(r - 1, le.l, to_ll(le.rho), budget);
  rep.searchedCount = sub.searchedCount;
  if (sub.windowCertified) rep.windowCertified = *rep.windowCertified && *sub.windowCertified;
  for (const MonomialSubspace& Wp : sub.maximizers)
    rep.maximizers.push_back(tail.unified(Wp.embedded().scaled(shift)));
  detail::finalize_report(rep);

  for (const MonomialSubspace& W : rep.maximizers) {
    rep.persistenceOk.push_back(persistence_check(W, spec).pass);
    rep.borelOk.push_back(detail::borel_after_some_permutation(W));
    bool point = true;
    for (int i = 1; i <= r && point; ++i)
      point = W.contains(Monomial::power(r, i, static_cast<int>(d)));
    rep.pointSupportOk.push_back(point);
  }
  return rep;
}

/// Closed form for a quotient of shape "degree-gamma hypersurface plus p
/// points": x0^gamma times (the full x0-divisible part of degree delta plus
/// a worst subspace of the coefficient subring).  Emits x0-normalized
/// representatives with their component decompositions.
inline WorstReport construct_goodsit(int r, long long gamma, long long p, long long d,
                                     long long budget = kDefaultBudget) {
  if (gamma == 0)
    throw std::invalid_argument("gamma = 0 is the constant case; use the constant construction");
  if (gamma < 0 || p < 0) throw std::invalid_argument("parameters must be nonnegative");
  if (r < 2) throw UnsupportedDimension("construction needs ambient dimension at least 2");
  HilbertPolySpec spec = HilbertPolySpec::goodsit(r, gamma, p);
  if (d < spec.gotzmann_number())
    throw std::invalid_argument("construction needs degree at or above the Gotzmann number");
  const long long delta = d - gamma;
  const long long bSub = to_ll(binom(r - 1 + delta, r - 1)) - p;

  WorstReport rep;
  rep.r = r;
  rep.d = d;
  rep.b = to_ll(spec.Q(d));
  rep.specText = spec.canonical_text();
  rep.method = "construct";
  rep.windowCertified = dup_conditions_hold(spec, d);

  // All degree-delta monomials divisible by x0, i.e. the leading segment.
  const MonomialSubspace head =
      lex_segment(r, static_cast<int>(delta), to_ll(binom(r + delta - 1, r)));
  const Monomial shift = Monomial::power(r, 0, static_cast<int>(gamma));
  const MonomialSubspace z0 =
      lex_segment(r, static_cast<int>(d), to_ll(binom(r + delta, r)));  // x0^gamma * S_delta
  WorstReport sub = worst_Z(r - 1, delta, bSub, budget);
  rep.searchedCount = sub.searchedCount;
  if (sub.windowCertified) rep.windowCertified = *rep.windowCertified && *sub.windowCertified;

  std::vector<std::pair<MonomialSubspace, MonomialSubspace>> built;  // (W, W' embedded)
  for (const MonomialSubspace& Wp : sub.maximizers) {
    MonomialSubspace inner = head.unified(Wp.embedded());
    built.emplace_back(inner.scaled(shift), Wp.embedded());
  }
  std::sort(built.begin(), built.end(),
            [](const auto& a, const auto& b) { return b.first < a.first; });
  for (auto& [W, z1] : built) {
    rep.maximizers.push_back(W);
    rep.decompositions.push_back(WorstDecomposition{
        z0, z1, HilbertPolySpec::goodsit(r, gamma, 0), HilbertPolySpec::constant(r, p)});
  }
  // finalize_report would re-sort identically; fill the derived fields here
  // to keep decompositions aligned.
  for (const MonomialSubspace& W : rep.maximizers) rep.adapted.push_back(adapted_one_ps(W));
  {
    std::vector<MonomialSubspace> reps;
    for (const MonomialSubspace& W : rep.maximizers)
      reps.push_back(detail::orbit_representative(W));
    detail::sort_canonical(reps);
    rep.orbitRepresentatives = std::move(reps);
  }
  if (!rep.maximizers.empty()) {
    StateVector s = state_vector(rep.maximizers.front());
    rep.maxNormSq = s.norm_sq();
    rep.dist0Sq = s.dist0_sq();
  }
  for (const MonomialSubspace& W : rep.maximizers) {
    rep.persistenceOk.push_back(persistence_check(W, spec).pass);
    rep.borelOk.push_back(detail::borel_after_some_permutation(W));
  }
  return rep;
}

/// The closed-form route for the full Grassmannian maximizer set: the
/// constant-quotient construction (the complement size must be a constant
/// value the closed form covers) closed under coordinate permutations.
inline WorstReport worst_Z_construct(int r, long long d, long long b,
                                     long long budget = kDefaultBudget) {
  const Int c = monomial_count(r, d) - b;
  if (c < 1 || Int(d) < c)
    throw std::invalid_argument("no closed form for this dimension at this degree");
  WorstReport rep = construct_constant(r, to_ll(c), d, budget);
  rep.b = b;
  rep.specText.reset();
  std::vector<MonomialSubspace> closed;
  for (const MonomialSubspace& W : rep.maximizers)
    for (const std::vector<int>& perm : permutations(r + 1))
      closed.push_back(W.permuted(perm));
  rep.maximizers = std::move(closed);
  rep.persistenceOk.clear();
  rep.borelOk.clear();
  rep.pointSupportOk.clear();
  detail::finalize_report(rep);
  return rep;
}

/// Brute force when the subset count fits the budget; otherwise fall back to
/// the closed-form route so the full maximizer set is still returned.
inline WorstReport worst_Z(int r, long long d, long long b, long long budget = kDefaultBudget) {
  try {
    return brute_force_Z(r, d, b, budget);
  } catch (const BudgetExceeded&) {
    const Int c = monomial_count(r, d) - b;
    if (c < 1 || Int(d) < c) throw;  // no closed form applies; keep the refusal
    return worst_Z_construct(r, d, b, budget);
  }
}

/// Complementation must biject the maximizer sets of dimensions b and
/// C(r+d,r) - b, with equal center distances.
inline bool verify_duality(int r, long long d, long long b, long long budget = kDefaultBudget) {
  WorstReport small = brute_force_Z(r, d, b, budget);
  WorstReport large = brute_force_Z(r, d, to_ll(monomial_count(r, d)) - b, budget);
  if (small.dist0Sq != large.dist0Sq) return false;
  std::vector<MonomialSubspace> complements;
  for (const MonomialSubspace& W : small.maximizers) complements.push_back(W.complement());
  detail::sort_canonical(complements);
  return complements == large.maximizers;
}

/// The family of saturated worst ideals must not depend on the degree across
/// the window [dLow, dHigh].  gamma = 0 reads p as the constant value.
inline bool stability_window_check(int r, long long gamma, long long p, long long dLow,
                                   long long dHigh, long long budget = kDefaultBudget) {
  if (dLow > dHigh) throw std::invalid_argument("empty degree window");
  std::optional<std::vector<std::string>> first;
  for (long long d = dLow; d <= dHigh; ++d) {
    WorstReport rep = gamma == 0 ? construct_constant(r, p, d, budget)
                                 : construct_goodsit(r, gamma, p, d, budget);
    std::vector<std::string> sats;
    for (const MonomialSubspace& W : rep.maximizers)
      sats.push_back(MonomialIdeal::from_subspace(W).saturation().str());
    std::sort(sats.begin(), sats.end());
    sats.erase(std::unique(sats.begin(), sats.end()), sats.end());
    if (!first) first = std::move(sats);
    else if (*first != sats) return false;
  }
  return true;
}

}  // namespace gitworst
