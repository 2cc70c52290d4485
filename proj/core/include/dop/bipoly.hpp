#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dop/rational.hpp"
#include "dop/unipoly.hpp"

namespace dop {

enum class Var { X, Y };

/// Exponent pair x^i y^j. Ordered graded-lexicographically with x > y.
struct Mono {
  std::uint32_t i = 0;
  std::uint32_t j = 0;

  [[nodiscard]] std::uint32_t degree() const { return i + j; }
  [[nodiscard]] bool divides(const Mono& o) const { return i <= o.i && j <= o.j; }

  friend Mono operator*(Mono a, Mono b) { return {a.i + b.i, a.j + b.j}; }
  friend bool operator==(Mono, Mono) = default;
  friend std::strong_ordering operator<=>(Mono a, Mono b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.i <=> b.i;
  }
};

/// Sparse polynomial in Q[x, y]; terms iterate in descending graded-lex order.
class BiPoly {
 public:
  using TermMap = std::map<Mono, Rational, std::greater<>>;
  static constexpr int kZeroDegree = -1;

  BiPoly() = default;
  explicit BiPoly(const Rational& c);
  BiPoly(std::initializer_list<std::pair<const Mono, Rational>> terms);

  static BiPoly x() { return term(1, {1, 0}); }
  static BiPoly y() { return term(1, {0, 1}); }
  static BiPoly term(const Rational& c, Mono m);
  /// Embeds a univariate polynomial as a polynomial in the given variable.
  static BiPoly from_uni(const UniPoly& p, Var v = Var::X);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Rational coeff(Mono m) const;

  /// Total degree; kZeroDegree for the zero polynomial.
  [[nodiscard]] int degree() const;
  [[nodiscard]] int degree_in(Var v) const;
  [[nodiscard]] Mono leading_mono() const;
  [[nodiscard]] Rational leading_coeff() const;
  /// Constant value; only meaningful when is_constant().
  [[nodiscard]] Rational constant_value() const;

  [[nodiscard]] BiPoly derivative(Var v) const;
  [[nodiscard]] BiPoly monic() const;
  [[nodiscard]] BiPoly pow(unsigned n) const;
  [[nodiscard]] BiPoly swap_vars() const;
  [[nodiscard]] Rational evaluate(const Rational& x, const Rational& y) const;
  /// Homogeneous component of the given total degree.
  [[nodiscard]] BiPoly homogeneous_part(int degree) const;

  /// Coefficients with respect to `v`: result[k] is the coefficient of v^k,
  /// a univariate polynomial in the other variable.
  [[nodiscard]] std::vector<UniPoly> coeffs_in(Var v) const;
  static BiPoly from_coeffs_in(const std::vector<UniPoly>& coeffs, Var v);
  /// The univariate polynomial in x when this polynomial does not involve y.
  [[nodiscard]] UniPoly to_uni_x() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  /// Adds c * m * o in place.
  void add_scaled(const BiPoly& o, const Rational& c, Mono m);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  /// Canonical text: descending graded-lex, e.g. `x^2*y - 3/2*y`.
  [[nodiscard]] std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace dop
