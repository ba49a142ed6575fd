#pragma once

// Monomials of k[x_0, ..., x_r] and monomial subspaces of a fixed degree
// piece, together with the lexicographic machinery the rest of the library
// is built on: enumeration in descending lex order, 1-based rank/unrank,
// lex (co)segments, and the exchange sets U_i(n).
//
// Convention: x_0 > x_1 > ... > x_r.  For monomials of equal degree this is
// plain lexicographic comparison of exponent vectors.

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gitworst/arith.hpp"

namespace gitworst {

class Monomial {
 public:
  explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    if (e_.empty()) throw std::invalid_argument("monomial needs at least one variable");
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("negative exponent");
  }

  /// The constant monomial 1 in r+1 variables.
  static Monomial one(int r) { return Monomial(std::vector<int>(r + 1, 0)); }
  /// x_i^e in r+1 variables.
  static Monomial power(int r, int i, int e) {
    std::vector<int> v(r + 1, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  int r() const { return static_cast<int>(e_.size()) - 1; }
  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  int exp(int i) const { return e_.at(i); }
  const std::vector<int>& exps() const { return e_; }

  bool divides(const Monomial& n) const {
    if (e_.size() != n.e_.size()) throw std::invalid_argument("variable count mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > n.e_[i]) return false;
    return true;
  }

  Monomial times(const Monomial& n) const {
    if (e_.size() != n.e_.size()) throw std::invalid_argument("variable count mismatch");
    std::vector<int> v = e_;
    for (size_t i = 0; i < v.size(); ++i) v[i] += n.e_[i];
    return Monomial(std::move(v));
  }

  /// this / n; requires n.divides(*this).
  Monomial quotient(const Monomial& n) const {
    if (!n.divides(*this)) throw std::invalid_argument("quotient of non-divisor");
    std::vector<int> v = e_;
    for (size_t i = 0; i < v.size(); ++i) v[i] -= n.e_[i];
    return Monomial(std::move(v));
  }

  Monomial with_exp(int i, int e) const {
    std::vector<int> v = e_;
    v.at(i) = e;
    return Monomial(std::move(v));
  }

  /// Relabel variables: position i of the result carries the exponent of
  /// variable perm[i], i.e. x_{perm[i]} is renamed to x_i.
  Monomial permuted(const std::vector<int>& perm) const {
    if (perm.size() != e_.size()) throw std::invalid_argument("bad permutation size");
    std::vector<int> v(e_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = e_.at(perm[i]);
    return Monomial(std::move(v));
  }

  /// Reinterpret a monomial of k[x_1..x_r] inside k[x_0..x_r] (prepend a
  /// zero x_0-exponent).
  Monomial embedded() const {
    std::vector<int> v;
    v.reserve(e_.size() + 1);
    v.push_back(0);
    v.insert(v.end(), e_.begin(), e_.end());
    return Monomial(std::move(v));
  }

  /// Text form: "x0^3*x1" (exponent 1 written bare), "1" for the constant.
  std::string str() const {
    std::string out;
    for (size_t i = 0; i < e_.size(); ++i) {
      if (e_[i] == 0) continue;
      if (!out.empty()) out += '*';
      out += 'x';
      out += std::to_string(i);
      if (e_[i] >= 2) {
        out += '^';
        out += std::to_string(e_[i]);
      }
    }
    return out.empty() ? "1" : out;
  }

  static Monomial parse(std::string_view text, int r);

  // Descending enumeration order == descending lexicographic comparison of
  // exponent vectors.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(),
                                                  b.e_.begin(), b.e_.end());
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }

 private:
  std::vector<int> e_;
};

namespace detail {
inline void strip_spaces(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
}
}  // namespace detail

inline Monomial Monomial::parse(std::string_view text, int r) {
  detail::strip_spaces(text);
  if (text.empty()) throw std::invalid_argument("empty monomial");
  std::vector<int> exps(r + 1, 0);
  if (text == "1") return Monomial(std::move(exps));
  size_t pos = 0;
  while (pos < text.size()) {
    size_t star = text.find('*', pos);
    std::string_view factor = text.substr(pos, star == std::string_view::npos ? star : star - pos);
    detail::strip_spaces(factor);
    if (factor.empty() || factor[0] != 'x')
      throw std::invalid_argument("bad monomial factor: '" + std::string(factor) + "'");
    size_t caret = factor.find('^');
    std::string idx_str(factor.substr(1, caret == std::string_view::npos ? caret : caret - 1));
    int idx = std::stoi(idx_str);
    int exp = 1;
    if (caret != std::string_view::npos) exp = std::stoi(std::string(factor.substr(caret + 1)));
    if (idx < 0 || idx > r) throw std::invalid_argument("variable index out of range: x" + idx_str);
    if (exp < 1) throw std::invalid_argument("exponent must be positive");
    exps[idx] += exp;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return Monomial(std::move(exps));
}

/// Number of monomials of degree d in r+1 variables, C(r+d, r).
inline Int monomial_count(int r, int d) {
  if (r < 0 || d < 0) throw std::invalid_argument("need r >= 0, d >= 0");
  return binom(r + d, r);
}

/// All monomials of degree d in x_0..x_r, in descending lex order.
inline std::vector<Monomial> enumerate_monomials(int r, int d) {
  std::vector<Monomial> out;
  out.reserve(static_cast<size_t>(to_ll(monomial_count(r, d))));
  std::vector<int> exps(r + 1, 0);
  // Assign exponents left to right, largest first: this is descending lex.
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == r) {
      exps[i] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      exps[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// 1-based position of m in the descending lex enumeration of its degree.
inline long long monomial_rank(const Monomial& m) {
  const int r = m.r();
  const int d = m.degree();
  Int ahead = 0;  // monomials strictly lex-greater than m
  int remaining = d;
  for (int i = 0; i < r; ++i) {
    // Larger exponent at position i, any tail: hockey-stick sum.
    ahead += binom(remaining - m.exp(i) - 1 + (r - i), r - i);
    remaining -= m.exp(i);
  }
  return to_ll(ahead) + 1;
}

/// Inverse of monomial_rank: the t-th monomial (1-based) of degree d.
inline Monomial monomial_unrank(int r, int d, long long t) {
  Int total = monomial_count(r, d);
  if (t < 1 || Int(t) > total)
    throw std::out_of_range("rank out of range: " + std::to_string(t));
  Int target = t - 1;  // monomials ahead of the one we want
  std::vector<int> exps(r + 1, 0);
  int remaining = d;
  for (int i = 0; i < r; ++i) {
    // Pick the exponent block containing the target: the count of monomials
    // with a larger exponent here shrinks as v grows, so take the smallest v
    // whose ahead-count fits.
    int chosen = 0;
    for (int v = 0; v <= remaining; ++v) {
      if (binom(remaining - v - 1 + (r - i), r - i) <= target) {
        chosen = v;
        break;
      }
    }
    target -= binom(remaining - chosen - 1 + (r - i), r - i);
    exps[i] = chosen;
    remaining -= chosen;
  }
  exps[r] = remaining;
  if (target != 0) throw std::logic_error("unrank failed to land");
  return Monomial(std::move(exps));
}

/// All permutations of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// ---------------------------------------------------------------------------

/// A set of distinct monomials of one degree, the span of which is a monomial
/// subspace of S_d.  Members are kept in descending lex order.
class MonomialSubspace {
 public:
  MonomialSubspace(int r, int d, std::vector<Monomial> members)
      : r_(r), d_(d), members_(std::move(members)) {
    if (r < 0 || d < 0) throw std::invalid_argument("need r >= 0, d >= 0");
    for (const Monomial& m : members_) {
      if (m.r() != r) throw std::invalid_argument("member has wrong variable count");
      if (m.degree() != d) throw std::invalid_argument("member has wrong degree");
    }
    std::sort(members_.begin(), members_.end(),
              [](const Monomial& a, const Monomial& b) { return a > b; });
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end())
      throw std::invalid_argument("duplicate member " + dup->str());
  }

  int r() const { return r_; }
  int degree() const { return d_; }
  long long dim() const { return static_cast<long long>(members_.size()); }
  const std::vector<Monomial>& members() const { return members_; }

  bool contains(const Monomial& m) const {
    return std::binary_search(members_.begin(), members_.end(), m,
                              [](const Monomial& a, const Monomial& b) { return a > b; });
  }

  MonomialSubspace complement() const {
    std::vector<Monomial> rest;
    for (Monomial& m : enumerate_monomials(r_, d_))
      if (!contains(m)) rest.push_back(std::move(m));
    return MonomialSubspace(r_, d_, std::move(rest));
  }

  MonomialSubspace permuted(const std::vector<int>& perm) const {
    std::vector<Monomial> moved;
    moved.reserve(members_.size());
    for (const Monomial& m : members_) moved.push_back(m.permuted(perm));
    return MonomialSubspace(r_, d_, std::move(moved));
  }

  /// Reinterpret a subspace of k[x_1..x_r]_d inside k[x_0..x_r]_d.
  MonomialSubspace embedded() const {
    std::vector<Monomial> up;
    up.reserve(members_.size());
    for (const Monomial& m : members_) up.push_back(m.embedded());
    return MonomialSubspace(r_ + 1, d_, std::move(up));
  }

  /// Multiply every member by a fixed monomial (degree shifts accordingly).
  MonomialSubspace scaled(const Monomial& m) const {
    std::vector<Monomial> out;
    out.reserve(members_.size());
    for (const Monomial& w : members_) out.push_back(w.times(m));
    return MonomialSubspace(r_, d_ + m.degree(), std::move(out));
  }

  /// Union of two member sets of the same (r, d).
  MonomialSubspace unified(const MonomialSubspace& o) const {
    std::vector<Monomial> all = members_;
    all.insert(all.end(), o.members_.begin(), o.members_.end());
    return MonomialSubspace(r_, d_, std::move(all));
  }

  std::string str() const {
    std::string out;
    for (const Monomial& m : members_) {
      if (!out.empty()) out += ',';
      out += m.str();
    }
    return out;
  }

  static MonomialSubspace parse(std::string_view text, int r, int d) {
    std::vector<Monomial> ms;
    size_t pos = 0;
    detail::strip_spaces(text);
    while (pos <= text.size() && !text.empty()) {
      size_t comma = text.find(',', pos);
      std::string_view piece = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
      ms.push_back(Monomial::parse(piece, r));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return MonomialSubspace(r, d, std::move(ms));
  }

  // Deterministic ordering for canonical report layout.
  friend std::strong_ordering operator<=>(const MonomialSubspace& a, const MonomialSubspace& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                  b.members_.begin(), b.members_.end());
  }
  friend bool operator==(const MonomialSubspace& a, const MonomialSubspace& b) {
    return a.r_ == b.r_ && a.d_ == b.d_ && a.members_ == b.members_;
  }

 private:
  int r_;
  int d_;
  std::vector<Monomial> members_;
};

/// First t monomials of degree d in descending lex order.
inline MonomialSubspace lex_segment(int r, int d, long long t) {
  Int total = monomial_count(r, d);
  if (t < 0 || Int(t) > total) throw std::out_of_range("segment size out of range");
  std::vector<Monomial> all = enumerate_monomials(r, d);
  all.resize(static_cast<size_t>(t), Monomial::one(r));
  return MonomialSubspace(r, d, std::move(all));
}

/// Everything except the first t monomials.
inline MonomialSubspace lex_cosegment(int r, int d, long long t) {
  Int total = monomial_count(r, d);
  if (t < 0 || Int(t) > total) throw std::out_of_range("segment size out of range");
  std::vector<Monomial> all = enumerate_monomials(r, d);
  all.erase(all.begin(), all.begin() + static_cast<size_t>(t));
  return MonomialSubspace(r, d, std::move(all));
}

/// U_i(n): monomials v of the same degree with deg_{x_j} v <= deg_{x_j} n for
/// every j != i (the exponent of x_i is free up to the degree budget).
inline MonomialSubspace u_set(int i, const Monomial& n) {
  const int r = n.r();
  const int d = n.degree();
  if (i < 0 || i > r) throw std::out_of_range("variable index out of range");
  std::vector<Monomial> out;
  std::vector<int> exps(r + 1, 0);
  auto rec = [&](auto&& self, int j, int used) -> void {
    if (j == r + 1) {
      if (used == d) out.emplace_back(exps);
      return;
    }
    if (j == i) {
      int room = d - used;
      for (int v = 0; v <= room; ++v) {
        exps[j] = v;
        self(self, j + 1, used + v);
      }
    } else {
      for (int v = 0; v <= n.exp(j) && used + v <= d; ++v) {
        exps[j] = v;
        self(self, j + 1, used + v);
      }
    }
  };
  rec(rec, 0, 0);
  return MonomialSubspace(r, d, std::move(out));
}

}  // namespace gitworst
