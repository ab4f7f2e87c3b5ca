#ifndef SCORONA_RATIONAL_HPP
#define SCORONA_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace scorona {

/// Arbitrary-precision rational, always stored gcd-reduced with a positive
/// denominator (zero is 0/1).
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Exact "p/q" text form, denominator always present ("3/1", "-1/2").
inline std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// Short form: "3" for integers, "-1/2" otherwise.
inline std::string to_short_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return to_fraction_string(r);
}

}  // namespace scorona

#endif  // SCORONA_RATIONAL_HPP
