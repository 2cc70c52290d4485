#include "dop/arith.hpp"

#include <utility>
#include <vector>

#include "dop/error.hpp"

namespace dop {

std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q) {
  if (q.is_zero()) throw ContractError("exact_divide by the zero polynomial");
  BiPoly rem = p;
  BiPoly quot;
  const Mono lm = q.leading_mono();
  const Rational lc = q.leading_coeff();
  while (!rem.is_zero()) {
    const Mono m = rem.leading_mono();
    // If q | rem then LM(q) | LM(rem); failing that, q cannot divide p.
    if (!lm.divides(m)) return std::nullopt;
    const Mono shift{m.i - lm.i, m.j - lm.j};
    const Rational c = rem.leading_coeff() / lc;
    quot.add_scaled(BiPoly(Rational(1)), c, shift);
    rem.add_scaled(q, -c, shift);
  }
  return quot;
}

bool divides(const BiPoly& q, const BiPoly& p) { return exact_divide(p, q).has_value(); }

namespace {

// Polynomial in y with Q[x] coefficients, index = power of y, trimmed.
using Rec = std::vector<UniPoly>;

void trim(Rec& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UniPoly rec_content(const Rec& a) {
  UniPoly g;
  for (const auto& c : a) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Rec rec_divide(const Rec& a, const UniPoly& d) {
  Rec out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(divmod(c, d).first);
  return out;
}

// Pseudo-remainder of a by b in Q[x][y].
Rec pseudo_rem(Rec a, const Rec& b) {
  const UniPoly& lc = b.back();
  const std::size_t db = b.size() - 1;
  while (a.size() > db && !a.empty()) {
    const UniPoly lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c = c * lc;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= lead * b[k];
    trim(a);
  }
  return a;
}

Rec primitive(const Rec& a) {
  if (a.empty()) return a;
  return rec_divide(a, rec_content(a));
}

}  // namespace

UniPoly content_in(const BiPoly& p, Var v) {
  return rec_content(p.coeffs_in(v));
}

BiPoly gcd(const BiPoly& p, const BiPoly& q) {
  if (p.is_zero() && q.is_zero()) throw ContractError("gcd of two zero polynomials");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  Rec a = p.coeffs_in(Var::Y);
  Rec b = q.coeffs_in(Var::Y);
  const UniPoly cont = gcd(rec_content(a), rec_content(b));
  a = primitive(a);
  b = primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    Rec r = primitive(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  // a is now the primitive gcd; degree 0 in y means the primitive parts are coprime.
  if (a.size() == 1) a = Rec{UniPoly(Rational(1))};
  for (auto& c : a) c = c * cont;
  return BiPoly::from_coeffs_in(a, Var::Y).monic();
}

namespace {

// Determinant of a square matrix over Q[t] by fraction-free elimination.
UniPoly bareiss_det(std::vector<std::vector<UniPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return UniPoly(Rational(1));
  UniPoly prev(Rational(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = divmod(m[k][k] * m[i][j] - m[i][k] * m[k][j], prev).first;
      }
      m[i][k] = UniPoly{};
    }
    prev = m[k][k];
  }
  UniPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace

BiPoly resultant(const BiPoly& p, const BiPoly& q, Var v) {
  const int dp = p.degree_in(v);
  const int dq = q.degree_in(v);
  if (dp <= 0 && dq <= 0) {
    throw ContractError("resultant: neither polynomial involves the eliminated variable");
  }
  if (p.is_zero() || q.is_zero()) return {};
  const Var other = v == Var::X ? Var::Y : Var::X;
  const Rec a = p.coeffs_in(v);
  const Rec b = q.coeffs_in(v);
  const auto m = static_cast<std::size_t>(dp);
  const auto n = static_cast<std::size_t>(dq);
  const std::size_t size = m + n;
  std::vector<std::vector<UniPoly>> syl(size, std::vector<UniPoly>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) syl[r][r + k] = a[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) syl[n + r][r + k] = b[n - k];
  return BiPoly::from_uni(bareiss_det(std::move(syl)), other);
}

BiPoly squarefree_part(const BiPoly& p) {
  if (p.is_zero()) throw ContractError("squarefree_part of the zero polynomial");
  if (p.is_constant()) return BiPoly(Rational(1));
  const BiPoly g = gcd(gcd(p, p.derivative(Var::X)), p.derivative(Var::Y));
  return exact_divide(p, g)->monic();
}

}  // namespace dop
