#pragma once

#include <gmpxx.h>

#include <string>

namespace gbs {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& n) { return n.get_str(); }

// "p/q" in lowest terms, or "p" when the denominator is one.
inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline Integer abs_value(const Integer& n) { return n < 0 ? Integer(-n) : n; }
inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign_of(const Integer& n) { return sgn(n); }

inline bool is_unit(const Integer& n) { return n == 1 || n == -1; }

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace gbs
