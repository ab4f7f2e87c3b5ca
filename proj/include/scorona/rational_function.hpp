#ifndef SCORONA_RATIONAL_FUNCTION_HPP
#define SCORONA_RATIONAL_FUNCTION_HPP

#include <string>
#include <string_view>
#include <utility>

#include "scorona/polynomial.hpp"

namespace scorona {

/// Element of Q(x) kept in canonical form: gcd(num, den) = 1 and den monic.
/// Because the form is canonical, == is value equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1L) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : num_(c), den_(1L) {}    // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : num_(c), den_(1L) {}               // NOLINT(google-explicit-constructor)
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RationalFunction inverse() const {
    if (num_.is_zero()) throw DivisionByZero();
    return {den_, num_};
  }

  Rational operator()(const Rational& at) const {
    const Rational d = den_(at);
    if (d.is_zero()) throw DivisionByZero();
    return num_(at) / d;
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // Cross-cancel first to keep intermediate degrees small.
    const Polynomial g1 = gcd(a.num_, b.den_);
    const Polynomial g2 = gcd(b.num_, a.den_);
    RationalFunction r;
    r.num_ = exact_div(a.num_, g1) * exact_div(b.num_, g2);
    r.den_ = exact_div(a.den_, g2) * exact_div(b.den_, g1);
    r.make_den_monic();
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  /// "num / den", parenthesizing multi-term parts: "2 / (x - 3)". A unit
  /// denominator prints as the numerator alone.
  std::string to_string(std::string_view var = "x") const {
    if (is_polynomial()) return num_.to_string(var);
    auto wrap = [&](const Polynomial& p) {
      std::string s = p.to_string(var);
      return p.term_count() > 1 ? "(" + s + ")" : s;
    };
    return wrap(num_) + " / " + wrap(den_);
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = Polynomial(1L);
      return;
    }
    const Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    make_den_monic();
  }
  void make_den_monic() {
    const Rational lc = den_.leading();
    if (lc == 1) return;
    num_ = num_ * Polynomial(Rational(1) / lc);
    den_ = den_ * Polynomial(Rational(1) / lc);
  }

  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& r) { return r.is_zero(); }

inline RationalFunction pow(const RationalFunction& base, long e) {
  if (e < 0) return pow(base.inverse(), -e);
  return {pow(base.num(), static_cast<std::size_t>(e)), pow(base.den(), static_cast<std::size_t>(e))};
}

/// p evaluated at an element n/d of Q(x), computed over the common
/// denominator: p(n/d) = sum c_k n^k d^(deg-k) / d^deg.
inline RationalFunction ratfun_eval_poly(const Polynomial& p, const RationalFunction& at) {
  if (p.is_zero()) return {};
  const auto& c = p.coefficients();
  const std::size_t deg = c.size() - 1;
  Polynomial acc;
  Polynomial num_pow(1L);
  std::vector<Polynomial> den_pows(deg + 1, Polynomial(1L));
  for (std::size_t k = 1; k <= deg; ++k) den_pows[k] = den_pows[k - 1] * at.den();
  for (std::size_t k = 0; k <= deg; ++k) {
    if (!c[k].is_zero()) acc += Polynomial(c[k]) * num_pow * den_pows[deg - k];
    if (k < deg) num_pow *= at.num();
  }
  return {acc, den_pows[deg]};
}

}  // namespace scorona

#endif  // SCORONA_RATIONAL_FUNCTION_HPP
