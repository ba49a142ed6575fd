#pragma once

// Monomial ideals of k[x_0..x_r]: minimal generators, degree slices and
// Hilbert functions, saturation by variable colons, Borel-fixedness and the
// regularity of Borel-fixed saturations, the lex ideal attached to a
// polynomial spec, and the two membership tests for degree-d subspaces of a
// Hilbert scheme (dimension-growth persistence and the divisor/exchange
// characterization).

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gitworst/hilbert.hpp"
#include "gitworst/monomial.hpp"

namespace gitworst {

class MonomialIdeal {
 public:
  MonomialIdeal(int r, std::vector<Monomial> gens) : r_(r) {
    if (r < 0) throw std::invalid_argument("need r >= 0");
    for (const Monomial& g : gens)
      if (g.r() != r) throw std::invalid_argument("generator has wrong variable count");
    gens_ = minimize(std::move(gens));
  }

  static MonomialIdeal from_subspace(const MonomialSubspace& W) {
    return MonomialIdeal(W.r(), W.members());
  }

  static MonomialIdeal zero(int r) { return MonomialIdeal(r, {}); }
  static MonomialIdeal unit(int r) { return MonomialIdeal(r, {Monomial::one(r)}); }

  int r() const { return r_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  bool contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  int max_generator_degree() const {
    int d = 0;
    for (const Monomial& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  /// All degree-d monomials lying in the ideal.
  MonomialSubspace degree_slice(int d) const {
    std::vector<Monomial> in;
    for (Monomial& m : enumerate_monomials(r_, d))
      if (contains(m)) in.push_back(std::move(m));
    return MonomialSubspace(r_, d, std::move(in));
  }

  Int slice_dim(int d) const { return Int(degree_slice(d).dim()); }

  /// dim (S/I)_d.
  Int hilbert_function_quotient(int d) const { return monomial_count(r_, d) - slice_dim(d); }

  /// (I : x_j^inf): drop the x_j exponent from every generator.
  MonomialIdeal colon_var_infty(int j) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (const Monomial& g : gens_) out.push_back(g.with_exp(j, 0));
    return MonomialIdeal(r_, std::move(out));
  }

  MonomialIdeal intersect(const MonomialIdeal& o) const {
    if (o.r_ != r_) throw std::invalid_argument("variable count mismatch");
    std::vector<Monomial> out;
    out.reserve(gens_.size() * o.gens_.size());
    for (const Monomial& g : gens_)
      for (const Monomial& h : o.gens_) {
        std::vector<int> e(r_ + 1);
        for (int i = 0; i <= r_; ++i) e[i] = std::max(g.exp(i), h.exp(i));
        out.emplace_back(std::move(e));
      }
    return MonomialIdeal(r_, std::move(out));
  }

  /// Intersection of the variable colons (I : x_j^inf) over all j.
  MonomialIdeal saturation() const {
    MonomialIdeal out = colon_var_infty(0);
    for (int j = 1; j <= r_; ++j) out = out.intersect(colon_var_infty(j));
    return out;
  }

  /// Closed under the adjacent exchanges x_{j-1} * m / x_j on generators
  /// (which is enough for the whole ideal).
  bool is_borel_fixed() const {
    for (const Monomial& g : gens_)
      for (int j = 1; j <= r_; ++j) {
        if (g.exp(j) == 0) continue;
        Monomial moved = g.with_exp(j - 1, g.exp(j - 1) + 1).with_exp(j, g.exp(j) - 1);
        if (!contains(moved)) return false;
      }
    return true;
  }

  MonomialIdeal permuted(const std::vector<int>& perm) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    for (const Monomial& g : gens_) out.push_back(g.permuted(perm));
    return MonomialIdeal(r_, std::move(out));
  }

  /// Castelnuovo-Mumford regularity of a Borel-fixed ideal: the top minimal
  /// generator degree (characteristic zero).
  long long regularity_borel() const {
    if (is_zero()) throw std::invalid_argument("regularity of the zero ideal");
    if (!is_borel_fixed())
      throw std::invalid_argument("regularity shortcut needs a Borel-fixed ideal");
    return max_generator_degree();
  }

  std::string str() const {
    std::string out;
    for (const Monomial& g : gens_) {
      if (!out.empty()) out += ',';
      out += g.str();
    }
    return out;
  }

  /// Comma- or newline-separated generator list.
  static MonomialIdeal parse(std::string_view text, int r) {
    std::vector<Monomial> gens;
    std::string buf;
    auto flush = [&]() {
      std::string_view piece(buf);
      detail::strip_spaces(piece);
      if (!piece.empty()) gens.push_back(Monomial::parse(piece, r));
      buf.clear();
    };
    for (char ch : text) {
      if (ch == ',' || ch == '\n' || ch == '\r') flush();
      else buf += ch;
    }
    flush();
    return MonomialIdeal(r, std::move(gens));
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.r_ == b.r_ && a.gens_ == b.gens_;
  }

 private:
  static std::vector<Monomial> minimize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a > b;
    });
    std::vector<Monomial> kept;
    for (const Monomial& g : gens) {
      bool redundant = false;
      for (const Monomial& k : kept)
        if (k.divides(g)) {
          redundant = true;
          break;
        }
      if (!redundant) kept.push_back(g);
    }
    return kept;
  }

  int r_;
  std::vector<Monomial> gens_;  // minimal, sorted by degree then descending lex
};

/// The lex ideal of a polynomial spec: generators read off the Macaulay
/// exponents a_0 <= ... <= a_n as
/// x_i^{a_i - a_{i-1} + 1} * prod_{j<i} x_j^{a_j - a_{j-1}} with a_{-1} = 1.
inline MonomialIdeal lex_ideal(const HilbertPolySpec& spec) {
  const int r = spec.r();
  const std::vector<long long>& a = spec.a_sequence();
  if (a.empty()) return MonomialIdeal::unit(r);  // empty subscheme
  std::vector<Monomial> gens;
  for (size_t i = 0; i < a.size(); ++i) {
    std::vector<int> exps(r + 1, 0);
    long long prev = 1;
    for (size_t j = 0; j < i; ++j) {
      exps[static_cast<int>(j)] = static_cast<int>(a[j] - prev);
      prev = a[j];
    }
    exps[static_cast<int>(i)] = static_cast<int>(a[i] - prev + 1);
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(r, std::move(gens));
}

// ---------------------------------------------------------------------------

/// Borel-fixedness of the ideal spanned by a single-degree subspace, tested
/// on the members directly (binary search instead of generator division).
inline bool is_borel_fixed(const MonomialSubspace& W) {
  for (const Monomial& m : W.members())
    for (int j = 1; j <= W.r(); ++j) {
      if (m.exp(j) == 0) continue;
      Monomial moved = m.with_exp(j - 1, m.exp(j - 1) + 1).with_exp(j, m.exp(j) - 1);
      if (!W.contains(moved)) return false;
    }
  return true;
}

/// The first variable relabeling that makes the spanned ideal Borel-fixed.
inline std::optional<std::vector<int>> borel_fixing_permutation(const MonomialSubspace& W) {
  for (const std::vector<int>& perm : permutations(W.r() + 1))
    if (is_borel_fixed(W.permuted(perm))) return perm;
  return std::nullopt;
}

// ---------------------------------------------------------------------------

/// Dimension-growth membership test: W spans the full degree-d ideal slice
/// of a point of the Hilbert scheme iff its size is Q(d) and multiplying by
/// the linear forms reaches size Q(d+1).
struct PersistenceReport {
  bool pass = false;
  Int dim = 0;
  Int expectedDim = 0;
  Int grownDim = 0;
  Int expectedGrownDim = 0;
};

inline PersistenceReport persistence_check(const MonomialSubspace& W, const HilbertPolySpec& spec) {
  if (W.r() != spec.r()) throw std::invalid_argument("variable count mismatch");
  const int d = W.degree();
  if (d < spec.gotzmann_number())
    throw std::invalid_argument("persistence needs degree at or above the Gotzmann number");
  PersistenceReport rep;
  rep.dim = W.dim();
  rep.expectedDim = spec.Q(d);
  std::vector<Monomial> grown;
  grown.reserve(W.members().size() * (W.r() + 1));
  for (const Monomial& m : W.members())
    for (int i = 0; i <= W.r(); ++i) grown.push_back(m.times(Monomial::power(W.r(), i, 1)));
  std::sort(grown.begin(), grown.end());
  grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
  rep.grownDim = static_cast<long long>(grown.size());
  rep.expectedGrownDim = spec.Q(d + 1);
  rep.pass = rep.dim == rep.expectedDim && rep.grownDim == rep.expectedGrownDim;
  return rep;
}

/// Divisor/exchange membership test: (a) the members share a common divisor
/// of degree gamma, and (b) every degree-d monomial outside W has some
/// variable index i whose exchange set U_i avoids W entirely.
struct MuraiReport {
  bool pass = false;
  bool divisorOk = false;
  std::optional<Monomial> commonDivisor;  // witness of degree gamma
  bool exchangeOk = false;
  std::vector<Monomial> nonMembers;
  std::vector<int> witnessIndex;  // per non-member: the avoiding i
  std::optional<Monomial> firstFailure;
};

inline MuraiReport murai_check(const MonomialSubspace& W, const HilbertPolySpec& spec) {
  if (W.r() != spec.r()) throw std::invalid_argument("variable count mismatch");
  const int r = W.r();
  const int d = W.degree();
  if (d < spec.gotzmann_number())
    throw std::invalid_argument("membership test needs degree at or above the Gotzmann number");
  const int gamma = spec.gamma();
  MuraiReport rep;

  if (W.dim() == 0) {
    rep.divisorOk = gamma == 0;
    if (rep.divisorOk) rep.commonDivisor = Monomial::one(r);
  } else {
    std::vector<int> low = W.members().front().exps();
    for (const Monomial& m : W.members())
      for (int i = 0; i <= r; ++i) low[i] = std::min(low[i], m.exp(i));
    Monomial gcd{low};
    rep.divisorOk = gcd.degree() >= gamma;
    if (rep.divisorOk) {
      // Trim the gcd down to a degree-gamma witness.
      std::vector<int> w = gcd.exps();
      int excess = gcd.degree() - gamma;
      for (int i = 0; i <= r && excess > 0; ++i) {
        int cut = std::min(w[i], excess);
        w[i] -= cut;
        excess -= cut;
      }
      rep.commonDivisor = Monomial{std::move(w)};
    }
  }

  rep.exchangeOk = true;
  const MonomialSubspace outside = W.complement();
  for (const Monomial& n : outside.members()) {
    int found = -1;
    for (int i = 0; i <= r && found < 0; ++i) {
      const MonomialSubspace u = u_set(i, n);
      bool disjoint = true;
      for (const Monomial& v : u.members())
        if (W.contains(v)) {
          disjoint = false;
          break;
        }
      if (disjoint) found = i;
    }
    if (found < 0) {
      rep.exchangeOk = false;
      if (!rep.firstFailure) rep.firstFailure = n;
    }
    rep.nonMembers.push_back(n);
    rep.witnessIndex.push_back(found);
  }

  rep.pass = rep.divisorOk && rep.exchangeOk;
  return rep;
}

// ---------------------------------------------------------------------------

/// Saturation plus the coordinate search that makes its regularity readable:
/// try all variable relabelings until the saturation becomes Borel-fixed.
struct RegularityReport {
  MonomialIdeal input;
  MonomialIdeal saturated;
  bool inputSaturated = false;
  std::optional<std::vector<int>> borelPerm;  // relabeling that works, if any
  std::optional<long long> regularity;

  RegularityReport(MonomialIdeal in, MonomialIdeal sat)
      : input(std::move(in)), saturated(std::move(sat)) {}
};

inline RegularityReport regularity_report(const MonomialIdeal& I) {
  RegularityReport rep(I, I.saturation());
  rep.inputSaturated = rep.saturated == I;
  if (rep.saturated.is_zero()) return rep;  // no regularity to report
  for (const std::vector<int>& perm : permutations(I.r() + 1)) {
    if (rep.saturated.permuted(perm).is_borel_fixed()) {
      rep.borelPerm = perm;
      rep.regularity = rep.saturated.permuted(perm).regularity_borel();
      break;
    }
  }
  return rep;
}

}  // namespace gitworst
