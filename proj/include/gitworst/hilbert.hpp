#pragma once

// Hilbert-polynomial algebra for closed subschemes of P^r: parsing and
// validation of polynomial specs, greedy binomial (Gotzmann) decomposition,
// Macaulay representation of the complement codimension Q, the derived
// scalar functions (delta, l, e, rho, p, alpha, epsilon, Delta, C, l', e'),
// and finite certification of the two asymptotic degree thresholds.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gitworst/arith.hpp"
#include "gitworst/monomial.hpp"

namespace gitworst {

/// Raised for malformed or inadmissible polynomial specs (maps to CLI usage
/// errors).
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a quantity needs a positive-dimensional coefficient subring
/// that does not exist (e.g. l'/e' in ambient dimension 1).
class UnsupportedDimension : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// l = least integer with value <= C(r+l, r), plus the associated weighted
/// count e and the slack rho = C(r+l, r) - value.  Requires r >= 1.
struct LERho {
  long long l = 0;
  Int e = 0;
  Int rho = 0;
};

inline LERho l_e_rho(int r, const Int& value) {
  if (r < 1) throw UnsupportedDimension("l/e need at least one ring variable");
  if (value < 0) throw std::invalid_argument("l/e of a negative value");
  long long l = 0;
  while (binom(r + l, r) < value) ++l;
  // e = [value - C(r+l-1, r)] * l + sum_{i<l} C(r+i-1, r-1) * i
  Int e = (value - binom(r + l - 1, r)) * l;
  for (long long i = 0; i < l; ++i) e += binom(r + i - 1, r - 1) * i;
  return {l, e, binom(r + l, r) - value};
}

/// Scalar functions attached to a spec at one degree d.  The primed pair and
/// the discriminant live in the one-variable-fewer subring and are absent in
/// ambient dimension 1.
struct DerivedScalars {
  long long d = 0;
  long long delta = 0;
  long long l = 0;
  Int e = 0;
  Int rho = 0;
  Int pOfD = 0;
  Int alpha = 0;
  Int epsilon = 0;
  Int center = 0;
  std::optional<long long> lPrime;
  std::optional<Int> ePrime;
  std::optional<Int> discriminant;
};

/// A validated Hilbert polynomial for subschemes of P^r together with its
/// decomposition data.
class HilbertPolySpec {
 public:
  static HilbertPolySpec constant(int r, long long c) {
    return HilbertPolySpec(r, Polynomial::constant(Rat(c)));
  }

  /// P(t) = C(t+r, r) - C(t+r-gamma, r) + p: a degree-gamma hypersurface
  /// contribution plus p extra points.
  static HilbertPolySpec goodsit(int r, long long gamma, long long p) {
    if (gamma < 0 || p < 0) throw SpecError("goodsit parameters must be nonnegative");
    Polynomial P = Polynomial::binomial(r, r) - Polynomial::binomial(r - gamma, r) +
                   Polynomial::constant(Rat(p));
    return HilbertPolySpec(r, std::move(P));
  }

  /// Coefficients c_i in the basis {C(t+i, i)}.
  static HilbertPolySpec from_binomial_coeffs(int r, const std::vector<Rat>& coeffs) {
    Polynomial P;
    for (size_t i = 0; i < coeffs.size(); ++i)
      P = P + Polynomial::binomial(static_cast<long long>(i), static_cast<int>(i)) * coeffs[i];
    return HilbertPolySpec(r, std::move(P));
  }

  /// Grammar: `const:<c>` | `goodsit:<gamma>,<p>` | `binom:<c0>,<c1>,...`.
  static HilbertPolySpec parse(std::string_view text, int r);

  int r() const { return r_; }
  const Polynomial& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }
  bool is_constant() const { return poly_.degree() <= 0; }

  Int P(long long d) const { return poly_.at_int(d); }
  Int Q(long long d) const { return binom(r_ + d, r_) - P(d); }

  /// Weakly decreasing exponents of the greedy decomposition
  /// P(t) = sum_i C(t + b_i - i + 1, b_i).
  const std::vector<int>& b_sequence() const { return b_; }
  /// Weakly increasing a_0 <= ... <= a_n with
  /// Q(d) = sum_i C(r - i + d - a_i, r - i) for all d >= gotzmann_number().
  const std::vector<long long>& a_sequence() const { return a_; }
  long long gotzmann_number() const { return static_cast<long long>(b_.size()); }
  /// Number of decomposition steps of top exponent r-1.
  int gamma() const { return gamma_; }
  /// The trailing constant when the polynomial has the
  /// hypersurface-plus-points shape (every b_i is r-1 or 0); absent otherwise.
  std::optional<long long> p_const() const { return pConst_; }

  /// Integer coefficients in the basis {C(t+i, i)} (empty for P = 0).
  const std::vector<Int>& binomial_coefficients() const { return binomCoeffs_; }

  /// Shortest spec text that reparses to this polynomial.
  std::string canonical_text() const {
    if (is_constant()) return "const:" + binomCoeffs_[0].str();
    if (pConst_ && gamma_ >= 1)
      return "goodsit:" + std::to_string(gamma_) + "," + std::to_string(*pConst_);
    std::string out = "binom:";
    for (size_t i = 0; i < binomCoeffs_.size(); ++i) {
      if (i) out += ',';
      out += binomCoeffs_[i].str();
    }
    return out;
  }

  DerivedScalars derived_scalars(long long d) const;

  friend bool operator==(const HilbertPolySpec& x, const HilbertPolySpec& y) {
    return x.r_ == y.r_ && x.poly_ == y.poly_;
  }

 private:
  HilbertPolySpec(int r, Polynomial P);

  int r_;
  Polynomial poly_;
  std::vector<Int> binomCoeffs_;
  std::vector<int> b_;
  std::vector<long long> a_;
  int gamma_ = 0;
  std::optional<long long> pConst_;
};

inline HilbertPolySpec::HilbertPolySpec(int r, Polynomial P) : r_(r), poly_(std::move(P)) {
  if (r < 1) throw SpecError("ambient dimension must be at least 1");
  if (poly_.degree() >= r)
    throw SpecError("polynomial degree " + std::to_string(poly_.degree()) +
                    " is not below the ambient dimension " + std::to_string(r));
  {
    std::vector<Rat> cs = poly_.binomial_coeffs();
    for (const Rat& c : cs) {
      if (!is_integer(c))
        throw SpecError("polynomial is not integer-valued (coefficient " + c.str() +
                        " in the binomial basis)");
      binomCoeffs_.push_back(numerator(c));
    }
    if (binomCoeffs_.empty()) binomCoeffs_.push_back(0);
  }

  // Greedy peel: at step i (1-based) remove C(t + b_i - i + 1, b_i) where
  // b_i is the current degree.  A genuine Hilbert polynomial peels to zero
  // with weakly decreasing b_i.
  Polynomial rem = poly_;
  long long step = 1;
  while (!rem.is_zero()) {
    int b = rem.degree();
    if (rem.leading() < 0)
      throw SpecError("not a Hilbert polynomial for this ambient dimension");
    if (b == 0) {
      // Constant tail: peels one unit per step.
      Rat cr = rem.coeff(0);
      Int c = numerator(cr);
      if (c > 2'000'000)
        throw SpecError("constant term too large to decompose (" + c.str() + ")");
      long long cl = to_ll(c);
      b_.insert(b_.end(), static_cast<size_t>(cl), 0);
      break;
    }
    if (step > 200'000) throw SpecError("decomposition did not terminate");
    b_.push_back(b);
    rem = rem - Polynomial::binomial(b - step + 1, b);
    ++step;
  }

  const long long m = static_cast<long long>(b_.size());
  long long zeros = 0;
  bool shape = true;
  for (int b : b_) {
    if (b == r_ - 1) ++gamma_;            // for r = 1 every b_i = 0 counts here
    else if (b == 0) ++zeros;
    else shape = false;
  }
  if (shape) pConst_ = zeros;

  if (m > 0) {
    const int beta = b_.back();
    const int n = r_ - 1 - beta;
    std::vector<long long> exps(n + 1, 0);
    for (int b : b_) ++exps.at(r_ - 1 - b);
    if (n == 0) {
      a_ = {exps[0]};
    } else {
      a_.resize(n + 1);
      a_[0] = exps[0] + 1;
      for (int j = 1; j < n; ++j) a_[j] = a_[j - 1] + exps[j];
      a_[n] = a_[n - 1] + exps[n] - 1;
    }
    if (a_.front() < 1 || a_.back() != m)
      throw std::logic_error("inconsistent Macaulay representation");
    for (size_t j = 1; j < a_.size(); ++j)
      if (a_[j] < a_[j - 1]) throw std::logic_error("Macaulay exponents not increasing");
    // The representation is recovered combinatorially; re-check it against Q
    // at r+2 sample degrees.
    for (long long d = m; d < m + r_ + 2; ++d) {
      Int q = 0;
      for (size_t i = 0; i < a_.size(); ++i)
        q += binom(r_ - static_cast<long long>(i) + d - a_[i], r_ - static_cast<long long>(i));
      if (q != Q(d)) throw std::logic_error("Macaulay representation fails to evaluate");
    }
  }
}

inline HilbertPolySpec HilbertPolySpec::parse(std::string_view text, int r) {
  detail::strip_spaces(text);
  auto parse_ll = [](std::string_view s) -> long long {
    detail::strip_spaces(s);
    if (s.empty()) throw SpecError("missing integer in spec");
    size_t used = 0;
    long long v;
    try {
      v = std::stoll(std::string(s), &used);
    } catch (const std::exception&) {
      throw SpecError("bad integer '" + std::string(s) + "' in spec");
    }
    if (used != s.size()) throw SpecError("bad integer '" + std::string(s) + "' in spec");
    return v;
  };
  auto split = [](std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
      size_t nxt = s.find(sep, pos);
      out.push_back(s.substr(pos, nxt == std::string_view::npos ? nxt : nxt - pos));
      if (nxt == std::string_view::npos) break;
      pos = nxt + 1;
    }
    return out;
  };
  if (text.rfind("const:", 0) == 0) {
    long long c = parse_ll(text.substr(6));
    if (c < 0) throw SpecError("const spec needs a nonnegative value");
    return constant(r, c);
  }
  if (text.rfind("goodsit:", 0) == 0) {
    auto parts = split(text.substr(8), ',');
    if (parts.size() != 2) throw SpecError("goodsit spec needs exactly two parameters");
    return goodsit(r, parse_ll(parts[0]), parse_ll(parts[1]));
  }
  if (text.rfind("binom:", 0) == 0) {
    auto parts = split(text.substr(6), ',');
    std::vector<Rat> coeffs;
    for (std::string_view part : parts) {
      detail::strip_spaces(part);
      size_t slash = part.find('/');
      if (slash == std::string_view::npos) {
        coeffs.emplace_back(parse_ll(part));
      } else {
        long long num = parse_ll(part.substr(0, slash));
        long long den = parse_ll(part.substr(slash + 1));
        if (den == 0) throw SpecError("zero denominator in spec coefficient");
        coeffs.push_back(Rat(num) / den);
      }
    }
    return from_binomial_coeffs(r, coeffs);
  }
  throw SpecError("unrecognized spec '" + std::string(text) +
                  "' (expected const:..., goodsit:..., or binom:...)");
}

inline DerivedScalars HilbertPolySpec::derived_scalars(long long d) const {
  if (d < gotzmann_number())
    throw std::invalid_argument("scalars need a degree at or above the Gotzmann number");
  DerivedScalars s;
  s.d = d;
  s.delta = d - gamma_;
  const Int Pd = P(d);
  const Int Qd = Q(d);
  LERho le = l_e_rho(r_, Pd);
  s.l = le.l;
  s.e = le.e;
  s.rho = le.rho;
  // delta is pinned down by C(r+delta-1, r) < Q(d) <= C(r+delta, r).
  if (!is_zero() && !(binom(r_ + s.delta - 1, r_) < Qd && Qd <= binom(r_ + s.delta, r_)))
    throw std::logic_error("delta fails its defining bound");
  s.pOfD = binom(r_ + s.delta, r_) - Qd;
  s.alpha = Pd - s.pOfD;
  Int eps = 0;
  for (long long i = s.delta + 1; i <= d; ++i) eps += binom(r_ + i - 1, r_ - 1) * i;
  s.epsilon = eps;
  if (eps % r_ != 0) throw std::logic_error("epsilon not divisible by the ambient dimension");
  s.center = -s.pOfD * gamma_ - d * s.alpha + eps + eps / r_ + s.pOfD * s.delta;
  if (r_ >= 2) {
    // The primed pair measures p at the shifted degree inside the subring
    // with one variable fewer.
    const Int pShift = binom(r_ + d, r_) - Q(d + gamma_);
    LERho sub = l_e_rho(r_ - 1, pShift);
    s.lPrime = sub.l;
    s.ePrime = sub.e;
    s.discriminant = s.center * s.center - 8 * s.pOfD * s.delta * (*s.ePrime) +
                     8 * (*s.ePrime) * (*s.ePrime);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Threshold certification.  Radical comparisons are decided by sign analysis
// and exact squaring; the radicand is carried as r * (its rational value),
// which is an integer.

namespace detail {
/// bound < sqrt(radTimesR / r)?
inline bool below_radical(const Int& bound, const Int& radTimesR, int r) {
  if (radTimesR < 0) return false;
  if (bound < 0) return true;
  return r * bound * bound < radTimesR;
}
/// sqrt(radTimesR / r) < bound?
inline bool radical_below(const Int& radTimesR, int r, const Int& bound) {
  if (radTimesR < 0) return false;
  if (bound <= 0) return false;
  return radTimesR < r * bound * bound;
}
}  // namespace detail

/// The degree-d instance of the chain certified by the first threshold:
/// positivity of the quadratic discriminant, the lower and upper bounds on
/// its radical, the linear-growth inequality, and (constant specs only)
/// the two-sided unit bound.
inline bool dp_conditions_hold(const HilbertPolySpec& spec, long long d) {
  const int r = spec.r();
  const DerivedScalars s = spec.derived_scalars(d);
  const Int P = spec.P(d);
  const Int dP = Int(d) * P;
  const Int e = s.e;
  // r * (d^2 P^2 - 4 d P e + 2 (r+1)/r e^2)
  const Int radTimesR = r * dP * dP - 4 * r * dP * e + 2 * (r + 1) * e * e;
  if (!(radTimesR > 0)) return false;
  // (dP - sqrt(rad)) / (2dP) < 1/(r+1)  <=>  (r-1) dP < (r+1) sqrt(rad)
  if (!(Int(r) * (r - 1) * (r - 1) * dP * dP < Int(r + 1) * (r + 1) * radTimesR)) return false;
  // |dP - 2e - sqrt(rad)| < 2e
  if (!detail::below_radical(dP - 4 * e, radTimesR, r)) return false;
  if (!detail::radical_below(radTimesR, r, dP)) return false;
  // e/(dP) <= l/d < 1/8
  if (!(e <= Int(s.l) * P)) return false;
  if (!(8 * s.l < d)) return false;
  if (spec.is_constant()) {
    // |dP - 2e - sqrt(rad)| < 2
    const Int X = dP - 2 * e;
    if (!detail::below_radical(X - 2, radTimesR, r)) return false;
    if (!detail::radical_below(radTimesR, r, X + 2)) return false;
  }
  return true;
}

/// The degree-d instance of the chain certified by the second threshold:
/// 0 < (C - sqrt(Delta))/2 < 1 < p*delta < (C + sqrt(Delta))/2 with
/// Delta > 0, all in exact arithmetic.
inline bool dup_conditions_hold(const HilbertPolySpec& spec, long long d) {
  if (spec.r() < 2)
    throw UnsupportedDimension("second threshold needs ambient dimension at least 2");
  const DerivedScalars s = spec.derived_scalars(d);
  const Int C = s.center;
  const Int D = *s.discriminant;
  const Int pd = s.pOfD * s.delta;
  if (!(D > 0)) return false;
  // (C - sqrt(D))/2 > 0  <=>  sqrt(D) < C
  if (!(C > 0 && D < C * C)) return false;
  // (C - sqrt(D))/2 < 1  <=>  C - 2 < sqrt(D)
  if (!(C - 2 < 0 || (C - 2) * (C - 2) < D)) return false;
  if (!(pd > 1)) return false;
  // p*delta < (C + sqrt(D))/2  <=>  2*p*delta - C < sqrt(D)
  const Int t = 2 * pd - C;
  if (!(t < 0 || t * t < D)) return false;
  return true;
}

namespace detail {
template <typename Holds>
std::optional<long long> suffix_threshold(long long gP, long long cap, Holds&& holds) {
  if (cap < gP) throw std::invalid_argument("threshold cap below the Gotzmann number");
  long long d = cap;
  while (d >= gP && d >= 1 && holds(d)) --d;
  if (d == cap) return std::nullopt;
  return d + 1;
}
}  // namespace detail

/// Least d0 >= max(Gotzmann number, 1) such that the first chain holds for
/// every d in [d0, cap]; none if it fails at cap itself.
inline std::optional<long long> threshold_DP(const HilbertPolySpec& spec, long long cap) {
  if (spec.is_zero()) throw SpecError("thresholds are undefined for the zero polynomial");
  return detail::suffix_threshold(spec.gotzmann_number(), cap,
                                  [&](long long d) { return dp_conditions_hold(spec, d); });
}

/// Least d0 >= max(Gotzmann number, 1) such that the second chain holds for
/// every d in [d0, cap]; none if it fails at cap itself.
inline std::optional<long long> threshold_Dup(const HilbertPolySpec& spec, long long cap) {
  if (spec.is_zero()) throw SpecError("thresholds are undefined for the zero polynomial");
  return detail::suffix_threshold(spec.gotzmann_number(), cap,
                                  [&](long long d) { return dup_conditions_hold(spec, d); });
}

/// The regularity offset of the lex ideal family: bracketing position of the
/// constant tail p inside the ambient ring (gamma = 0) or its hyperplane
/// subring (gamma >= 1); -1 when p = 0.  Defined for hypersurface-plus-points
/// shaped specs only.
inline std::optional<long long> l_P_of(const HilbertPolySpec& spec) {
  if (!spec.p_const()) return std::nullopt;
  const long long p = *spec.p_const();
  if (p == 0) return -1;
  if (spec.gamma() == 0) return l_e_rho(spec.r(), p).l;
  if (spec.r() < 2)
    throw UnsupportedDimension("regularity offset needs ambient dimension at least 2");
  return l_e_rho(spec.r() - 1, p).l;
}

}  // namespace gitworst
