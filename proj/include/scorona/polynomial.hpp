#ifndef SCORONA_POLYNOMIAL_HPP
#define SCORONA_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scorona/errors.hpp"
#include "scorona/rational.hpp"

namespace scorona {

/// Dense univariate polynomial over Q. coefficients()[d] is the coefficient
/// of x^d; there is never a trailing zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// Ascending-degree integer coefficients: {1, 0, -1} is 1 - x^2.
  static Polynomial from_ints(std::initializer_list<long> ascending) {
    std::vector<Rational> c;
    c.reserve(ascending.size());
    for (long v : ascending) c.emplace_back(v);
    return Polynomial(std::move(c));
  }
  static Polynomial x() { return monomial(Rational(1), 1); }
  static Polynomial monomial(const Rational& c, std::size_t degree) {
    if (c.is_zero()) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Rational(0); }
  Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  Polynomial monic() const {
    if (is_zero()) return {};
    Polynomial r = *this;
    const Rational lc = leading();
    for (auto& c : r.coeffs_) c /= lc;
    return r;
  }

  /// Horner evaluation.
  Rational operator()(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// p(q(x)).
  Polynomial compose(const Polynomial& inner) const {
    Polynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + Polynomial(*it);
    return acc;
  }

  /// p(x + c).
  Polynomial shifted(const Rational& c) const {
    return compose(Polynomial(std::vector<Rational>{c, Rational(1)}));
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Human-readable form such as "x^4 - 3x^2 + 1"; non-integer coefficients
  /// are parenthesized: "(1/2)x".
  std::string to_string(std::string_view var = "x") const;

  /// Number of nonzero terms.
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
    return n;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Polynomial& p) { return p.is_zero(); }

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db);
  const Rational lead = bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational q = rem[k + db] / lead;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
    quot[k] = std::move(q);
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Quotient of an exact division; throws InternalInconsistency if b does not divide a.
inline Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw InternalInconsistency("inexact polynomial division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divrem(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

inline Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return exact_div(a * b, gcd(a, b)).monic();
}

inline Polynomial pow(const Polynomial& base, std::size_t e) {
  Polynomial result(1L);
  Polynomial b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

/// Given p(x) with only even-degree terms, returns q with q(x^2) = p(x).
inline Polynomial even_part_substitute(const Polynomial& p) {
  const auto& c = p.coefficients();
  std::vector<Rational> out((c.size() + 1) / 2);
  for (std::size_t d = 0; d < c.size(); ++d) {
    if (d % 2 == 1) {
      if (!c[d].is_zero()) throw NonEvenPolynomial();
    } else {
      out[d / 2] = c[d];
    }
  }
  return Polynomial(std::move(out));
}

inline std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = mag == 1;
    const bool integral = denominator_of(mag) == 1;
    if (k == 0) {
      out += to_short_string(mag);
      continue;
    }
    if (!unit) out += integral ? to_short_string(mag) : "(" + to_short_string(mag) + ")";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace scorona

#endif  // SCORONA_POLYNOMIAL_HPP
