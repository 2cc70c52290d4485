#include "dop/derivation.hpp"

#include "dop/arith.hpp"
#include "dop/error.hpp"
#include "dop/linalg.hpp"

namespace dop {

std::string Derivation::to_string() const {
  return "dx=" + dx.to_string() + "; dy=" + dy.to_string();
}

BiPoly apply(const Derivation& d, const BiPoly& p) {
  return d.dx * p.derivative(Var::X) + d.dy * p.derivative(Var::Y);
}

std::optional<BiPoly> is_darboux(const Derivation& d, const BiPoly& p) {
  if (p.is_constant()) throw ContractError("is_darboux: p must be nonconstant");
  return exact_divide(apply(d, p), p);
}

namespace {

std::optional<Rational> eigenvalue(const Derivation& d, const BiPoly& v) {
  if (v.is_zero()) return std::nullopt;
  const BiPoly dv = apply(d, v);
  if (dv.is_zero()) return std::nullopt;
  const Rational lambda = dv.leading_coeff() / v.leading_coeff();
  if (dv == v * lambda) return lambda;
  return std::nullopt;
}

}  // namespace

NilpotencyVerdict locally_nilpotent_bounded(const Derivation& d, unsigned kmax) {
  if (kmax < 2) throw ContractError("locally_nilpotent_bounded: kmax must be at least 2");
  BiPoly vx = BiPoly::x();
  BiPoly vy = BiPoly::y();
  std::optional<unsigned> zx;
  std::optional<unsigned> zy;
  for (unsigned k = 0; k <= kmax; ++k) {
    if (!zx && vx.is_zero()) zx = k;
    if (!zy && vy.is_zero()) zy = k;
    if (zx && zy) return Nilpotent{std::max(*zx, *zy)};
    if (k == kmax) break;
    for (BiPoly* v : {&vx, &vy}) {
      if (auto lambda = eigenvalue(d, *v)) return NotNilpotentEigen{v->monic(), *lambda};
    }
    if (!zx) vx = apply(d, vx);
    if (!zy) vy = apply(d, vy);
  }
  return NilpotencyUnknown{kmax};
}

ShamsuddinResult shamsuddin_analyze(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero()) throw ContractError("shamsuddin_analyze: a must be nonzero");
  // c' = a c has only c = 0, so a solution is unique; a nonzero one has
  // deg c = deg b - deg a.
  if (b.is_zero()) return UniqueDarboux{UniPoly{}};
  const int m = b.degree() - a.degree();
  if (m < 0) return DSimple{};
  const auto unknowns = static_cast<std::size_t>(m) + 1;
  const auto rows = static_cast<std::size_t>(b.degree()) + 1;
  Matrix sys(rows, Vector(unknowns));
  for (std::size_t k = 0; k < unknowns; ++k) {
    const UniPoly basis = UniPoly::monomial(Rational(1), static_cast<int>(k));
    const UniPoly image = basis.derivative() - a * basis;
    for (std::size_t r = 0; r < rows; ++r) sys[r][k] = image.coeff(static_cast<int>(r));
  }
  Vector rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) rhs[r] = b.coeff(static_cast<int>(r));
  const auto sol = solve(std::move(sys), rhs);
  if (!sol) return DSimple{};
  return UniqueDarboux{UniPoly(*sol)};
}

std::optional<std::pair<UniPoly, UniPoly>> shamsuddin_shape(const Derivation& d) {
  if (d.dx != BiPoly(Rational(1)) || d.dy.degree_in(Var::Y) != 1) return std::nullopt;
  const auto rows = d.dy.coeffs_in(Var::Y);
  if (rows.size() != 2 || rows[1].is_zero()) return std::nullopt;
  return std::pair{rows[1], rows[0]};
}

}  // namespace dop
