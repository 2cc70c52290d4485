#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dop/rational.hpp"

namespace dop {

/// Dense univariate polynomial over Q, lowest degree first.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and degree() reports kZeroDegree for it.
class UniPoly {
 public:
  static constexpr int kZeroDegree = -1;

  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  explicit UniPoly(const Rational& c);

  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly variable() { return monomial(Rational(1), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(int k) const;
  [[nodiscard]] Rational leading_coeff() const;

  [[nodiscard]] UniPoly derivative() const;
  [[nodiscard]] UniPoly monic() const;
  [[nodiscard]] Rational evaluate(const Rational& at) const;
  [[nodiscard]] UniPoly pow(unsigned n) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Text in the canonical rendering with the given variable name.
  [[nodiscard]] std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; divisor must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// True when b divides a exactly in Q[x]; b must be nonzero.
bool divides(const UniPoly& b, const UniPoly& a);

/// Distinct rational roots, ascending. Input must be nonzero.
std::vector<Rational> rational_roots(const UniPoly& p);

/// The factor of p left after removing every rational root (square-free,
/// monic). Degree > 0 means p has non-rational complex roots.
UniPoly nonrational_part(const UniPoly& p);

}  // namespace dop
