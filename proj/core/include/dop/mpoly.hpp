#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "dop/rational.hpp"

namespace dop::mpoly {

using Exp = std::vector<std::uint16_t>;

/// Block graded-reverse-lexicographic order. Variables are split into
/// consecutive blocks; an earlier block dominates every later one, and within
/// a block monomials compare by degree, then reverse-lexicographically. With
/// one block of two variables this is graded-lex with x0 > x1.
class Order {
 public:
  explicit Order(std::size_t nvars) : Order(nvars, {nvars}) {}
  Order(std::size_t nvars, std::vector<std::size_t> block_sizes);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] std::strong_ordering compare(const Exp& a, const Exp& b) const;
  /// Index of the block containing variable v.
  [[nodiscard]] std::size_t block_of(std::size_t v) const;
  [[nodiscard]] const std::vector<std::size_t>& block_sizes() const { return blocks_; }

 private:
  std::size_t nvars_;
  std::vector<std::size_t> blocks_;
};

struct Term {
  Exp exp;
  Rational coeff;
};

/// Terms strictly descending in the order they were built with, no zero coefficients.
using Poly = std::vector<Term>;

Poly constant(std::size_t nvars, const Rational& c);
Poly variable(std::size_t nvars, std::size_t v);
unsigned total_degree(const Exp& e);

Poly add(const Poly& a, const Poly& b, const Order& ord);
Poly sub(const Poly& a, const Poly& b, const Order& ord);
Poly mul(const Poly& a, const Poly& b, const Order& ord);
Poly scale(Poly a, const Rational& c);
Poly monic(Poly a);
/// Re-sorts terms and merges duplicates under `ord`.
Poly normalize(Poly a, const Order& ord);

/// Full reduction of p by `basis`.
Poly normal_form(const Poly& p, const std::vector<Poly>& basis, const Order& ord);

/// Reduced Groebner basis, monic, sorted by leading monomial descending.
/// Throws LimitError when `max_pairs` S-polynomial reductions do not suffice
/// or a basis coefficient grows past 2^12 bits.
std::vector<Poly> groebner(std::vector<Poly> gens, const Order& ord, std::size_t max_pairs = 200000);

/// Elements of a Groebner basis that involve only variables from `first_var` on.
std::vector<Poly> restrict_to_tail(const std::vector<Poly>& basis, std::size_t first_var);

/// Debug text with variables named v0, v1, ...
std::string to_string(const Poly& p);

}  // namespace dop::mpoly
