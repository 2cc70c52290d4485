#pragma once

#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dop/arith.hpp"
#include "dop/derivation.hpp"

// Degree-one Darboux polynomials by direct coefficient matching: the line
// x + b y + g is invariant iff d(x) + b d(y) vanishes on x = -b y - g, and
// y + g iff d(y) vanishes on y = -g. The conditions are polynomial in the
// parameters and are solved by resultants.
namespace dop::test {

struct LineOracle {
  std::set<std::string> lines;  // canonical text of every rational invariant line
  bool infinite = false;
};

namespace detail {

using E3 = std::array<unsigned, 3>;  // exponents of b, g, y
using P3 = std::map<E3, Rational>;

inline P3 mul3(const P3& a, const P3& b) {
  P3 r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) r[E3{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}] += ca * cb;
  return r;
}

// Coefficients in y of sum_k weight_k * p_k(-b y - g, y), each a polynomial in
// (b, g) stored as a BiPoly with b as x and g as y.
inline std::vector<BiPoly> x_line_conditions(const std::vector<std::pair<BiPoly, P3>>& parts) {
  const P3 lin{{E3{1, 0, 1}, Rational(-1)}, {E3{0, 1, 0}, Rational(-1)}};
  P3 total;
  for (const auto& [p, weight] : parts)
    for (const auto& [m, c] : p.terms()) {
      P3 t{{E3{0, 0, m.j}, c}};
      for (unsigned k = 0; k < m.i; ++k) t = mul3(t, lin);
      for (const auto& [e, v] : mul3(t, weight)) total[e] += v;
    }
  std::map<unsigned, BiPoly> by_y;
  for (const auto& [e, v] : total)
    if (v != 0) by_y[e[2]] += BiPoly::term(v, Mono{e[0], e[1]});
  std::vector<BiPoly> out;
  for (auto& [k, q] : by_y)
    if (!q.is_zero()) out.push_back(q);
  return out;
}

inline UniPoly at_x(const BiPoly& p, const Rational& x0) {
  std::vector<Rational> c;
  for (const auto& row : p.coeffs_in(Var::Y)) c.push_back(row.evaluate(x0));
  return UniPoly(std::move(c));
}

inline Rational small_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> n(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  return make_rational(n(rng), den(rng));
}

// Rational common roots (b, g) of eqs; nullopt when the solution set is infinite.
inline std::optional<std::vector<std::pair<Rational, Rational>>> common_roots(const std::vector<BiPoly>& eqs,
                                                                              std::mt19937_64& rng) {
  std::vector<std::pair<Rational, Rational>> pts;
  if (eqs.empty()) return std::nullopt;
  BiPoly g = eqs.front();
  for (const auto& e : eqs) g = gcd(g, e);
  if (!g.is_constant()) return std::nullopt;
  // A polynomial in b alone, vanishing at every solution.
  BiPoly elim;
  for (const auto& e : eqs)
    if (e.degree_in(Var::Y) <= 0) elim = e;
  if (elim.is_zero()) {
    for (int attempt = 0; attempt < 10 && elim.is_zero(); ++attempt) {
      BiPoly l1, l2;
      for (const auto& e : eqs) {
        l1 += e * small_rational(rng);
        l2 += e * small_rational(rng);
      }
      if (l1.degree_in(Var::Y) > 0 && l2.degree_in(Var::Y) > 0) elim = resultant(l1, l2, Var::Y);
    }
  }
  if (elim.is_zero()) return std::nullopt;
  for (const auto& b : rational_roots(elim.to_uni_x())) {
    UniPoly in_g;
    for (const auto& e : eqs) in_g = gcd(in_g, at_x(e, b));
    if (in_g.is_zero()) return std::nullopt;
    if (in_g.is_constant()) continue;
    for (const auto& gv : rational_roots(in_g)) pts.emplace_back(b, gv);
  }
  return pts;
}

}  // namespace detail

inline LineOracle degree_one_oracle(const Derivation& d, std::mt19937_64& rng) {
  using detail::E3;
  LineOracle out;
  const auto xs = detail::x_line_conditions({{d.dx, {{E3{0, 0, 0}, Rational(1)}}},
                                             {d.dy, {{E3{1, 0, 0}, Rational(1)}}}});
  if (!xs.empty()) {
    const auto roots = detail::common_roots(xs, rng);
    if (!roots) {
      out.infinite = true;
    } else {
      for (const auto& [b, g] : *roots)
        out.lines.insert((BiPoly::x() + BiPoly::y() * b + BiPoly(g)).to_string());
    }
  } else {
    out.infinite = true;
  }
  // Lines y + g: d(y)(x, -g) must vanish identically in x.
  UniPoly cond;
  bool first = true;
  for (const auto& row : d.dy.coeffs_in(Var::X)) {
    // row is the coefficient of x^k as a polynomial in y; substitute y = -g.
    UniPoly sub;
    for (int j = 0; j <= row.degree(); ++j) sub += UniPoly::monomial(row.coeff(j) * ((j % 2) ? -1 : 1), j);
    cond = first ? sub : gcd(cond, sub);
    first = false;
  }
  if (first || cond.is_zero()) {
    out.infinite = true;
  } else if (!cond.is_constant()) {
    for (const auto& g : rational_roots(cond)) out.lines.insert((BiPoly::y() + BiPoly(g)).to_string());
  }
  return out;
}

}  // namespace dop::test
