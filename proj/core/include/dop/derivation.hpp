#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "dop/bipoly.hpp"
#include "dop/unipoly.hpp"

namespace dop {

/// delta = dx * d/dx + dy * d/dy on Q[x,y].
struct Derivation {
  BiPoly dx;
  BiPoly dy;

  [[nodiscard]] bool is_zero() const { return dx.is_zero() && dy.is_zero(); }
  /// max(deg dx, deg dy); kZeroDegree for the zero derivation.
  [[nodiscard]] int degree() const { return std::max(dx.degree(), dy.degree()); }
  [[nodiscard]] Derivation scaled(const Rational& a) const { return {dx * a, dy * a}; }
  /// `dx=<poly>; dy=<poly>`
  [[nodiscard]] std::string to_string() const;
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

BiPoly apply(const Derivation& d, const BiPoly& p);

/// Cofactor c with d(p) = c p, when p divides d(p). p must be nonconstant.
std::optional<BiPoly> is_darboux(const Derivation& d, const BiPoly& p);

struct Nilpotent {
  unsigned k;
};
struct NotNilpotentEigen {
  BiPoly p;
  Rational lambda;
};
struct NilpotencyUnknown {
  unsigned kmax;
};
using NilpotencyVerdict = std::variant<Nilpotent, NotNilpotentEigen, NilpotencyUnknown>;

/// Iterates d on x and y up to kmax times. Nilpotent(k) carries the least k
/// with d^k(x) = d^k(y) = 0; an iterate v with d(v) = lambda v, lambda != 0,
/// proves the opposite.
NilpotencyVerdict locally_nilpotent_bounded(const Derivation& d, unsigned kmax);

struct DSimple {
  friend bool operator==(DSimple, DSimple) = default;
};
struct UniqueDarboux {
  UniPoly c;
  friend bool operator==(const UniqueDarboux&, const UniqueDarboux&) = default;
};
using ShamsuddinResult = std::variant<DSimple, UniqueDarboux>;

/// For d/dx + (a y + b) d/dy: the polynomial solution c of c' = a c + b, if
/// any. a must be nonzero.
ShamsuddinResult shamsuddin_analyze(const UniPoly& a, const UniPoly& b);

/// (a, b) when d = d/dx + (a(x) y + b(x)) d/dy with a != 0.
std::optional<std::pair<UniPoly, UniPoly>> shamsuddin_shape(const Derivation& d);

}  // namespace dop
