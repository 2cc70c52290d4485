#pragma once

#include <gmpxx.h>

#include <string>

namespace dop {

// GMP keeps mpq_class canonical after every arithmetic operation; only
// direct construction from a numerator/denominator pair needs an explicit
// canonicalize(), which make_rational does.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// `num` or `num/den`.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace dop
