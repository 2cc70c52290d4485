#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dop/rational.hpp"
#include "dop/unipoly.hpp"

namespace dop {

/// Element of Q[x, x^-1] stored as x^offset times a polynomial whose
/// constant term is nonzero. Zero has an empty body and offset 0.
class LaurentUniPoly {
 public:
  LaurentUniPoly() = default;
  explicit LaurentUniPoly(const UniPoly& p) : LaurentUniPoly(0, p) {}
  LaurentUniPoly(long offset, const UniPoly& body);

  static LaurentUniPoly monomial(const Rational& c, long exponent);

  [[nodiscard]] bool is_zero() const { return body_.is_zero(); }
  [[nodiscard]] long offset() const { return offset_; }
  /// Stored coefficients from x^offset upward.
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return body_.coeffs(); }
  [[nodiscard]] long max_exponent() const { return offset_ + body_.degree(); }
  [[nodiscard]] Rational coeff(long exponent) const;

  /// The element as a polynomial when no negative powers occur.
  [[nodiscard]] std::optional<UniPoly> as_polynomial() const;
  /// (alpha, n) when the element is the single term alpha * x^n.
  [[nodiscard]] std::optional<std::pair<Rational, long>> as_monomial() const;

  [[nodiscard]] LaurentUniPoly derivative() const;

  LaurentUniPoly& operator+=(const LaurentUniPoly& o);
  LaurentUniPoly& operator-=(const LaurentUniPoly& o);

  friend LaurentUniPoly operator+(LaurentUniPoly a, const LaurentUniPoly& b) { return a += b; }
  friend LaurentUniPoly operator-(LaurentUniPoly a, const LaurentUniPoly& b) { return a -= b; }
  friend LaurentUniPoly operator*(const LaurentUniPoly& a, const LaurentUniPoly& b);
  friend bool operator==(const LaurentUniPoly&, const LaurentUniPoly&) = default;

  [[nodiscard]] std::string to_string() const;

 private:
  void normalize();
  long offset_ = 0;
  UniPoly body_;
};

}  // namespace dop
