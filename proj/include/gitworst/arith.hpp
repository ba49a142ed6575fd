#pragma once

// Exact arithmetic used everywhere in the library: arbitrary-precision
// integers and rationals, binomial coefficients, and a small univariate
// polynomial type over Q (dense, power basis).  No floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gitworst {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// C(n, k) as an exact integer; 0 whenever k < 0 or k > n (this covers
/// negative n for k >= 0, since then k > n).
inline Int binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

/// Checked narrowing; throws if the value does not fit in long long.
inline long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min())
    throw std::overflow_error("integer too large for a machine word: " + v.str());
  return v.convert_to<long long>();
}

inline Int numerator(const Rat& q) { return Int(boost::multiprecision::numerator(q)); }
inline Int denominator(const Rat& q) { return Int(boost::multiprecision::denominator(q)); }

inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

// ---------------------------------------------------------------------------

/// Univariate polynomial with exact rational coefficients, dense power basis.
/// Coefficient i multiplies d^i; the zero polynomial has an empty vector and
/// degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Rat v) { return Polynomial({std::move(v)}); }
  static Polynomial variable() { return Polynomial({Rat(0), Rat(1)}); }

  /// The polynomial d |-> C(d + shift, k), degree k, leading coefficient 1/k!.
  static Polynomial binomial(long long shift, int k) {
    if (k < 0) return Polynomial();
    Polynomial result = constant(Rat(1));
    for (int j = 0; j < k; ++j) {
      // multiply by (d + shift - j) / (j + 1)
      result = result * Polynomial({Rat(shift - j), Rat(1)});
      result = result * Rat(1, j + 1);
    }
    return result;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const Rat& coeff(int i) const {
    static const Rat kZero = 0;
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : kZero;
  }
  const Rat& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Rat operator()(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Rat at(long long d) const { return (*this)(Rat(d)); }

  /// Evaluate at an integer point where the value is known to be integral.
  Int at_int(long long d) const {
    Rat v = at(d);
    if (!is_integer(v))
      throw std::domain_error("polynomial value is not an integer at d=" + std::to_string(d));
    return numerator(v);
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
  }
  Polynomial operator-(const Polynomial& o) const { return *this + (o * Rat(-1)); }
  Polynomial operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }
  Polynomial operator*(const Rat& s) const {
    std::vector<Rat> r = c_;
    for (auto& x : r) x *= s;
    return Polynomial(std::move(r));
  }

  /// t |-> P(t + a).
  Polynomial shifted(long long a) const {
    Polynomial x_plus_a({Rat(a), Rat(1)});
    Polynomial acc, pow = constant(Rat(1));
    for (size_t i = 0; i < c_.size(); ++i) {
      acc = acc + pow * c_[i];
      pow = pow * x_plus_a;
    }
    return acc;
  }

  /// Coefficients in the basis C(d + i, i), i = 0..degree.  This basis is a
  /// Z-module basis of the integer-valued polynomials, so a polynomial takes
  /// integer values at all integers iff these coefficients are integers.
  std::vector<Rat> binomial_coeffs() const {
    std::vector<Rat> out(c_.size(), Rat(0));
    Polynomial rest = *this;
    while (!rest.is_zero()) {
      int m = rest.degree();
      Rat cm = rest.leading();
      for (int j = 2; j <= m; ++j) cm *= j;  // lc * m!
      out[m] = cm;
      rest = rest - binomial(m, m) * cm;
      if (rest.degree() >= m) throw std::logic_error("binomial basis peel failed");
    }
    return out;
  }

  static Polynomial from_binomial_coeffs(std::span<const Rat> coeffs) {
    Polynomial acc;
    for (size_t i = 0; i < coeffs.size(); ++i)
      acc = acc + binomial(static_cast<long long>(i), static_cast<int>(i)) * coeffs[i];
    return acc;
  }

  bool operator==(const Polynomial& o) const { return c_ == o.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Quotient and remainder of exact polynomial division.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Polynomial q, r = num;
  while (!r.is_zero() && r.degree() >= den.degree()) {
    int shift = r.degree() - den.degree();
    Rat factor = r.leading() / den.leading();
    std::vector<Rat> term(shift + 1, Rat(0));
    term[shift] = factor;
    Polynomial t{std::move(term)};
    q = q + t;
    r = r - den * t;
  }
  return {q, r};
}

/// Newton interpolation through the given (x, y) points; the x values must be
/// pairwise distinct.  Returns the unique polynomial of degree < #points.
inline Polynomial interpolate(std::span<const std::pair<long long, Rat>> pts) {
  const size_t n = pts.size();
  std::vector<Rat> dd(n);  // divided differences, updated in place
  for (size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i) {
      long long dx = pts[i].first - pts[i - level].first;
      if (dx == 0) throw std::invalid_argument("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  Polynomial acc, prod = Polynomial::constant(Rat(1));
  for (size_t i = 0; i < n; ++i) {
    acc = acc + prod * dd[i];
    prod = prod * Polynomial({Rat(-pts[i].first), Rat(1)});
  }
  return acc;
}

}  // namespace gitworst
