#pragma once

#include <optional>

#include "dop/bipoly.hpp"

namespace dop {

/// h with p = q*h when q divides p in Q[x,y]; nullopt otherwise. q must be nonzero.
std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q);

/// True when q divides p. q must be nonzero.
bool divides(const BiPoly& q, const BiPoly& p);

/// Greatest common divisor, monic under graded-lex. Not both zero.
BiPoly gcd(const BiPoly& p, const BiPoly& q);

/// Sylvester resultant eliminating `v`. A polynomial in the other variable,
/// embedded back into Q[x,y]. At least one input must involve `v`.
BiPoly resultant(const BiPoly& p, const BiPoly& q, Var v);

/// Product of the distinct irreducible factors of p, monic. p nonzero.
BiPoly squarefree_part(const BiPoly& p);

/// Content of p as a polynomial in `v` over Q[other], monic.
UniPoly content_in(const BiPoly& p, Var v);

}  // namespace dop
