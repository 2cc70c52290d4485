#include "dop/groebner.hpp"

#include <algorithm>

#include "dop/error.hpp"

namespace dop {

mpoly::Poly to_mpoly(const BiPoly& p, std::size_t nvars) {
  mpoly::Poly out;
  out.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    mpoly::Exp e(nvars, 0);
    e[0] = static_cast<std::uint16_t>(m.i);
    e[1] = static_cast<std::uint16_t>(m.j);
    out.push_back(mpoly::Term{std::move(e), c});
  }
  return out;
}

BiPoly from_mpoly(const mpoly::Poly& p) {
  BiPoly out;
  for (const auto& t : p) {
    for (std::size_t v = 2; v < t.exp.size(); ++v)
      if (t.exp[v] != 0) throw ContractError("from_mpoly: polynomial involves extra variables");
    out += BiPoly::term(t.coeff, Mono{t.exp[0], t.exp[1]});
  }
  return out;
}

GroebnerBasis buchberger(const std::vector<BiPoly>& gens) {
  const mpoly::Order ord(2);
  std::vector<mpoly::Poly> in;
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(to_mpoly(g));
  if (in.empty()) throw ContractError("buchberger: all generators are zero");
  GroebnerBasis gb;
  for (const auto& g : mpoly::groebner(std::move(in), ord)) gb.generators.push_back(from_mpoly(g));
  return gb;
}

BiPoly normal_form(const BiPoly& p, const GroebnerBasis& gb) {
  const mpoly::Order ord(2);
  std::vector<mpoly::Poly> basis;
  for (const auto& g : gb.generators) basis.push_back(to_mpoly(g));
  return from_mpoly(mpoly::normal_form(to_mpoly(p), basis, ord));
}

bool is_unit_ideal(const std::vector<BiPoly>& gens) {
  if (std::all_of(gens.begin(), gens.end(), [](const BiPoly& g) { return g.is_zero(); })) return false;
  return buchberger(gens).is_unit();
}

bool has_common_zero_with(const std::vector<BiPoly>& gens, const BiPoly& p) {
  if (p.is_zero()) throw ContractError("has_common_zero_with: p must be nonzero");
  std::vector<BiPoly> all = gens;
  all.push_back(p);
  return !is_unit_ideal(all);
}

}  // namespace dop
