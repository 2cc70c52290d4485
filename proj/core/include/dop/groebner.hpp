#pragma once

#include <vector>

#include "dop/bipoly.hpp"
#include "dop/mpoly.hpp"

namespace dop {

/// Reduced Groebner basis under graded-lex x > y; generators monic and sorted
/// by leading monomial, descending.
struct GroebnerBasis {
  std::vector<BiPoly> generators;

  [[nodiscard]] bool is_unit() const {
    return generators.size() == 1 && generators.front() == BiPoly(Rational(1));
  }
  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;
};

GroebnerBasis buchberger(const std::vector<BiPoly>& gens);
BiPoly normal_form(const BiPoly& p, const GroebnerBasis& gb);
bool is_unit_ideal(const std::vector<BiPoly>& gens);
/// True when V(gens) meets the curve p = 0 over the algebraic closure.
bool has_common_zero_with(const std::vector<BiPoly>& gens, const BiPoly& p);

mpoly::Poly to_mpoly(const BiPoly& p, std::size_t nvars = 2);
/// Reads variables 0 and 1 as x and y; other variables must be absent.
BiPoly from_mpoly(const mpoly::Poly& p);

}  // namespace dop
