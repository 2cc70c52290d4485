#include "dop/darboux.hpp"

#include <algorithm>
#include <map>

#include "dop/arith.hpp"
#include "dop/error.hpp"
#include "dop/groebner.hpp"
#include "dop/linalg.hpp"
#include "dop/mpoly.hpp"

namespace dop {

bool DarbouxCert::verify(const Derivation& d) const {
  return !p.is_constant() && apply(d, p) == cofactor * p;
}

bool PencilCert::verify(const Derivation& d) const {
  if (p.is_zero() || q.is_zero()) return false;
  if (apply(d, p) != cofactor * p || apply(d, q) != cofactor * q) return false;
  // Not proportional: p * lc(q) != q * lc(p).
  return p * q.leading_coeff() != q * p.leading_coeff();
}

namespace {

// Monomials of total degree <= n, descending in graded-lex order.
std::vector<Mono> monomials_upto(int n) {
  std::vector<Mono> out;
  for (int d = n; d >= 0; --d)
    for (int j = 0; j <= d; ++j)
      out.push_back(Mono{static_cast<std::uint32_t>(d - j), static_cast<std::uint32_t>(j)});
  return out;
}

// Canonical basis of {p : deg p <= n, d(p) = c p}: reduced row echelon form
// over monomials in descending order, so leading monomials are distinct and
// each element is monic.
std::vector<BiPoly> solution_space(const Derivation& d, const BiPoly& c, int n) {
  if (n < 0) return {};
  const auto cols = monomials_upto(n);
  std::map<Mono, std::size_t, std::greater<>> row_of;
  std::vector<BiPoly> images;
  images.reserve(cols.size());
  for (const auto& m : cols) {
    const BiPoly mono = BiPoly::term(1, m);
    images.push_back(apply(d, mono) - c * mono);
    for (const auto& [w, v] : images.back().terms()) row_of.try_emplace(w, 0);
  }
  std::size_t r = 0;
  for (auto& [w, idx] : row_of) idx = r++;
  Matrix a(row_of.size(), Vector(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const auto& [w, v] : images[k].terms()) a[row_of.at(w)][k] = v;
  Matrix basis = kernel(std::move(a), cols.size());
  rref(basis);
  std::vector<BiPoly> out;
  for (const auto& row : basis) {
    BiPoly p;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (!dop::is_zero(row[k])) p += BiPoly::term(row[k], cols[k]);
    out.push_back(p);
  }
  return out;
}

struct Points {
  std::vector<std::vector<Rational>> points;
  bool irrational = false;
  bool positive_dimensional = false;
};

mpoly::Poly substitute(const mpoly::Poly& p, std::size_t v, const Rational& value, const mpoly::Order& ord) {
  mpoly::Poly out;
  out.reserve(p.size());
  for (const auto& t : p) {
    Rational c = t.coeff;
    for (unsigned k = 0; k < t.exp[v]; ++k) c *= value;
    mpoly::Exp e = t.exp;
    e[v] = 0;
    out.push_back(mpoly::Term{std::move(e), std::move(c)});
  }
  return mpoly::normalize(std::move(out), ord);
}

// Rational points of the ideal generated by `sys` in k variables, by lex
// Groebner bases and back substitution from the last variable.
void rational_points(std::vector<mpoly::Poly> sys, std::size_t k, std::vector<std::optional<Rational>> fixed,
                     Points& out) {
  const mpoly::Order lex(k, std::vector<std::size_t>(k, 1));
  for (auto& p : sys) p = mpoly::normalize(std::move(p), lex);
  std::erase_if(sys, [](const mpoly::Poly& p) { return p.empty(); });
  std::optional<std::size_t> free_var;
  for (std::size_t v = k; v-- > 0;)
    if (!fixed[v]) {
      free_var = v;
      break;
    }
  if (sys.empty()) {
    if (free_var) {
      out.positive_dimensional = true;
      return;
    }
    std::vector<Rational> pt;
    for (const auto& f : fixed) pt.push_back(*f);
    out.points.push_back(std::move(pt));
    return;
  }
  const auto gb = mpoly::groebner(std::move(sys), lex);
  if (gb.size() == 1 && mpoly::total_degree(gb.front().front().exp) == 0) return;
  if (!free_var) {
    std::vector<Rational> pt;
    for (const auto& f : fixed) pt.push_back(*f);
    out.points.push_back(std::move(pt));
    return;
  }
  const std::size_t v = *free_var;
  const mpoly::Poly* uni = nullptr;
  for (const auto& g : gb) {
    const bool only_v = std::all_of(g.begin(), g.end(), [&](const mpoly::Term& t) {
      for (std::size_t u = 0; u < k; ++u)
        if (u != v && t.exp[u] != 0) return false;
      return true;
    });
    if (only_v) uni = &g;
  }
  if (uni == nullptr) {
    out.positive_dimensional = true;
    return;
  }
  UniPoly u;
  for (const auto& t : *uni) u += UniPoly::monomial(t.coeff, t.exp[v]);
  if (nonrational_part(u).degree() > 0) out.irrational = true;
  for (const auto& r : rational_roots(u)) {
    std::vector<mpoly::Poly> next;
    for (const auto& g : gb) next.push_back(substitute(g, v, r, lex));
    auto f = fixed;
    f[v] = r;
    rational_points(std::move(next), k, std::move(f), out);
  }
}

struct DegreeCofactors {
  std::vector<BiPoly> cofactors;
  bool irrational = false;
  bool positive_dimensional = false;
  bool exhausted = false;  // a Groebner budget ran out
};

Derivation top_part(const Derivation& d) {
  const int dd = d.degree();
  return {d.dx.homogeneous_part(dd), d.dy.homogeneous_part(dd)};
}

using PolyMatrix = std::vector<std::vector<UniPoly>>;

UniPoly mod(const UniPoly& a, const UniPoly& f) { return divmod(a, f).second; }

// u with u a = 1 mod f, for a coprime to f.
UniPoly inverse_mod(const UniPoly& a, const UniPoly& f) {
  UniPoly r0 = f, r1 = mod(a, f);
  UniPoly s0, s1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return mod(s0 * (Rational(1) / r0.leading_coeff()), f);
}

// Whether m (augmented, last column the right-hand side) is consistent at
// some root of the square-free modulus f, by elimination over Q[s]/(f) that
// splits f whenever a pivot is a zero divisor.
bool consistent_mod(const PolyMatrix& original, const UniPoly& f) {
  if (f.degree() < 1) return false;
  PolyMatrix m = original;
  for (auto& row : m)
    for (auto& e : row) e = mod(e, f);
  const std::size_t cols = m.empty() ? 0 : m.front().size() - 1;
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < m.size(); ++j) {
    std::optional<std::size_t> piv;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][j].is_zero()) continue;
      const UniPoly g = gcd(m[i][j], f);
      if (!g.is_constant()) return consistent_mod(original, g) || consistent_mod(original, divmod(f, g).first);
      piv = i;
      break;
    }
    if (!piv) continue;
    std::swap(m[r], m[*piv]);
    const UniPoly inv = inverse_mod(m[r][j], f);
    for (auto& e : m[r]) e = mod(e * inv, f);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][j].is_zero()) continue;
      const UniPoly factor = m[i][j];
      for (std::size_t k = j; k <= cols; ++k) m[i][k] = mod(m[i][k] - factor * m[r][k], f);
    }
    ++r;
  }
  for (std::size_t i = r; i < m.size(); ++i) {
    const UniPoly& e = m[i][cols];
    if (e.is_zero()) continue;
    const UniPoly g = gcd(e, f);
    if (g.is_constant()) return false;
    return consistent_mod(original, g);
  }
  return true;
}

bool consistent_at(const PolyMatrix& m, const Rational& s) {
  const std::size_t cols = m.front().size() - 1;
  Matrix a(m.size(), Vector(cols));
  Vector b(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j].evaluate(s);
    b[i] = m[i][cols].evaluate(s);
  }
  return solve(std::move(a), std::move(b)).has_value();
}

// Values of s for which the affine system m(s) is solvable. Fraction-free
// elimination over Q[s] gives residual conditions valid away from the roots
// of the pivots; those roots are examined separately.
void parametric_points(PolyMatrix m, const BiPoly& c_fixed, Mono s_mono, DegreeCofactors& out) {
  const PolyMatrix original = m;
  const std::size_t cols = m.front().size() - 1;
  UniPoly prev(Rational(1));
  UniPoly pivots(Rational(1));
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols && r < m.size(); ++j) {
    std::optional<std::size_t> piv;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][j].is_zero()) continue;
      if (!piv || m[i][j].degree() < m[*piv][j].degree()) piv = i;
      if (m[i][j].is_constant()) break;
    }
    if (!piv) continue;
    std::swap(m[r], m[*piv]);
    const UniPoly p = m[r][j];
    if (!p.is_constant()) pivots = pivots * p;
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      for (std::size_t k = j + 1; k <= cols; ++k) m[i][k] = divmod(p * m[i][k] - m[i][j] * m[r][k], prev).first;
      m[i][j] = UniPoly{};
    }
    prev = p;
    ++r;
  }
  UniPoly residual;
  for (std::size_t i = r; i < m.size(); ++i) residual = gcd(residual, m[i][cols]);
  if (residual.is_zero()) {
    out.positive_dimensional = true;
    return;
  }
  auto emit = [&](const Rational& s) { out.cofactors.push_back(c_fixed + BiPoly::term(s, s_mono)); };
  std::vector<Rational> candidates;
  if (!residual.is_constant()) {
    for (const auto& s : rational_roots(residual)) candidates.push_back(s);
  }
  if (!pivots.is_constant()) {
    for (const auto& s : rational_roots(pivots)) candidates.push_back(s);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& s : candidates)
    if (consistent_at(original, s)) emit(s);
  UniPoly special = residual.is_constant() ? UniPoly{} : nonrational_part(residual);
  if (!pivots.is_constant()) {
    const UniPoly extra = nonrational_part(pivots);
    special = special.is_zero() ? extra : nonrational_part(special * extra);
  }
  if (!special.is_zero() && special.degree() > 0 && consistent_mod(original, special)) out.irrational = true;
}

// Cofactors c = c_fixed + sum b_k free_c[k] for which
//   d(p) = c p,  p = p_fixed + sum a_j free_p[j]
// has a solution. The a-block is eliminated by a block order and the rational
// points of what remains are returned.
void eliminate_cofactors(const Derivation& d, const BiPoly& p_fixed, const std::vector<BiPoly>& free_p,
                         const BiPoly& c_fixed, const std::vector<Mono>& free_c, DegreeCofactors& out) {
  const std::size_t np = free_p.size();
  if (free_c.size() == 1 && np > 0) {
    // One cofactor unknown s: an affine system over Q[s] in the a-block.
    std::vector<BiPoly> lin, mul;
    for (const auto& e : free_p) {
      lin.push_back(apply(d, e) - c_fixed * e);
      mul.push_back(BiPoly::term(1, free_c[0]) * e);
    }
    const BiPoly lin0 = apply(d, p_fixed) - c_fixed * p_fixed;
    const BiPoly mul0 = BiPoly::term(1, free_c[0]) * p_fixed;
    std::map<Mono, std::size_t, std::greater<>> row_of;
    for (const auto* group : {&lin, &mul})
      for (const auto& q : *group)
        for (const auto& [w, v] : q.terms()) row_of.try_emplace(w, 0);
    for (const auto* q : {&lin0, &mul0})
      for (const auto& [w, v] : q->terms()) row_of.try_emplace(w, 0);
    std::size_t r = 0;
    for (auto& [w, idx] : row_of) idx = r++;
    PolyMatrix m(row_of.size(), std::vector<UniPoly>(np + 1));
    for (const auto& [w, i] : row_of) {
      for (std::size_t j = 0; j < np; ++j) m[i][j] = UniPoly{lin[j].coeff(w), -mul[j].coeff(w)};
      m[i][np] = UniPoly{-lin0.coeff(w), mul0.coeff(w)};
    }
    parametric_points(std::move(m), c_fixed, free_c[0], out);
    return;
  }
  const std::size_t nv = np + free_c.size();
  const mpoly::Order ord(nv, free_c.empty() ? std::vector<std::size_t>{nv} : std::vector<std::size_t>{np, free_c.size()});
  std::map<Mono, mpoly::Poly> eqs;
  auto push = [&](const BiPoly& poly, std::initializer_list<std::size_t> vars) {
    mpoly::Exp e(nv, 0);
    for (std::size_t v : vars) ++e[v];
    for (const auto& [w, v] : poly.terms()) eqs[w].push_back(mpoly::Term{e, v});
  };
  push(apply(d, p_fixed) - c_fixed * p_fixed, {});
  for (std::size_t j = 0; j < np; ++j) push(apply(d, free_p[j]) - c_fixed * free_p[j], {j});
  for (std::size_t k = 0; k < free_c.size(); ++k) {
    const BiPoly mu = BiPoly::term(-1, free_c[k]);
    push(mu * p_fixed, {np + k});
    for (std::size_t j = 0; j < np; ++j) push(mu * free_p[j], {np + k, j});
  }
  std::vector<mpoly::Poly> sys;
  for (auto& [w, poly] : eqs) {
    auto p = mpoly::normalize(std::move(poly), ord);
    if (!p.empty()) sys.push_back(std::move(p));
  }
  if (sys.empty()) {
    if (free_c.empty()) {
      out.cofactors.push_back(c_fixed);
    } else {
      out.positive_dimensional = true;
    }
    return;
  }
  std::vector<mpoly::Poly> gb;
  try {
    gb = mpoly::groebner(std::move(sys), ord);
  } catch (const LimitError&) {
    out.exhausted = true;
    return;
  }
  if (gb.size() == 1 && mpoly::total_degree(gb.front().front().exp) == 0) return;
  if (free_c.empty()) {
    out.cofactors.push_back(c_fixed);
    return;
  }
  std::vector<mpoly::Poly> tail;
  for (const auto& g : mpoly::restrict_to_tail(gb, np)) {
    mpoly::Poly h;
    for (const auto& t : g)
      h.push_back(mpoly::Term{mpoly::Exp(t.exp.begin() + static_cast<long>(np), t.exp.end()), t.coeff});
    tail.push_back(std::move(h));
  }
  Points pts;
  try {
    rational_points(std::move(tail), free_c.size(), std::vector<std::optional<Rational>>(free_c.size()), pts);
  } catch (const LimitError&) {
    out.exhausted = true;
  }
  out.irrational = out.irrational || pts.irrational;
  out.positive_dimensional = out.positive_dimensional || pts.positive_dimensional;
  for (const auto& pt : pts.points) {
    BiPoly c = c_fixed;
    for (std::size_t k = 0; k < free_c.size(); ++k) c += BiPoly::term(pt[k], free_c[k]);
    out.cofactors.push_back(std::move(c));
  }
}

std::vector<Mono> homogeneous_monomials(int n) {
  std::vector<Mono> out;
  for (int j = 0; j <= n; ++j) out.push_back(Mono{static_cast<std::uint32_t>(n - j), static_cast<std::uint32_t>(j)});
  return out;
}

struct Pinned {
  BiPoly c;   // cofactor parts fixed so far
  int level;  // highest cofactor degree still free; -1 when c is complete
  bool impossible = false;
};

// With p_n fixed, the components of d(p) - c p of degree >= n + l involve
// only c_{D-1}, ..., c_l and p_n, ..., p_{n-D+1+l}, and are linear in the
// unknown pieces once the higher cofactor parts are known. Walks l downward
// while each level has a unique solution.
Pinned pin_lower_cofactor(const Derivation& d, const BiPoly& p_n, const BiPoly& kappa, int dd) {
  const int n = p_n.degree();
  Pinned st{kappa, dd - 2};
  for (; st.level >= 0; --st.level) {
    const int l = st.level;
    std::vector<BiPoly> cols;
    for (int deg = n - 1; deg >= std::max(0, n - (dd - 1 - l)); --deg)
      for (const auto& m : homogeneous_monomials(deg)) cols.push_back(BiPoly::term(1, m));
    const std::size_t np = cols.size();
    const auto cm = homogeneous_monomials(l);
    for (const auto& m : cm) cols.push_back(BiPoly::term(-1, m) * p_n);
    auto truncate = [&](const BiPoly& q) {
      BiPoly t;
      for (const auto& [w, v] : q.terms())
        if (static_cast<int>(w.degree()) >= n + l) t += BiPoly::term(v, w);
      return t;
    };
    std::vector<BiPoly> images;
    for (std::size_t k = 0; k < cols.size(); ++k)
      images.push_back(truncate(k < np ? apply(d, cols[k]) - st.c * cols[k] : cols[k]));
    const BiPoly rhs = truncate(st.c * p_n - apply(d, p_n));
    std::map<Mono, std::size_t, std::greater<>> row_of;
    for (const auto& q : images)
      for (const auto& [w, v] : q.terms()) row_of.try_emplace(w, 0);
    for (const auto& [w, v] : rhs.terms()) row_of.try_emplace(w, 0);
    std::size_t r = 0;
    for (auto& [w, idx] : row_of) idx = r++;
    Matrix a(row_of.size(), Vector(cols.size()));
    Vector b(row_of.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
      for (const auto& [w, v] : images[k].terms()) a[row_of.at(w)][k] = v;
    for (const auto& [w, v] : rhs.terms()) b[row_of.at(w)] = v;
    const auto sol = solve(a, b);
    if (!sol) {
      st.impossible = true;
      return st;
    }
    const auto ker = kernel(a, cols.size());
    const bool free_c = std::any_of(ker.begin(), ker.end(), [&](const Vector& v) {
      return std::any_of(v.begin() + static_cast<long>(np), v.end(), [](const Rational& x) { return !dop::is_zero(x); });
    });
    if (free_c) return st;
    for (std::size_t k = 0; k < cm.size(); ++k) st.c += BiPoly::term((*sol)[np + k], cm[k]);
  }
  return st;
}

// Cofactors c admitting a solution of d(p) = c p with deg p exactly n.
//
// The top homogeneous parts satisfy d_top(p_n) = c_top p_n, a small system
// that pins c_top and p_n. The lower parts are then eliminated with c_top
// fixed, which leaves only the lower cofactor coefficients as unknowns.
DegreeCofactors cofactors_at_degree(const Derivation& d, int n) {
  DegreeCofactors out;
  const int dd = d.degree();
  if (dd <= 0) {
    // Constant derivation: the cofactor must vanish.
    out.cofactors.emplace_back();
    return out;
  }
  const Derivation top = top_part(d);
  const auto top_monos = homogeneous_monomials(n);
  const auto kappa_monos = homogeneous_monomials(dd - 1);
  DegreeCofactors tops;
  for (std::size_t lead = 0; lead < top_monos.size(); ++lead) {
    std::vector<BiPoly> rest;
    for (std::size_t k = lead + 1; k < top_monos.size(); ++k) rest.push_back(BiPoly::term(1, top_monos[k]));
    eliminate_cofactors(top, BiPoly::term(1, top_monos[lead]), rest, BiPoly{}, kappa_monos, tops);
  }
  out.irrational = tops.irrational;
  out.positive_dimensional = tops.positive_dimensional;
  out.exhausted = tops.exhausted;
  std::sort(tops.cofactors.begin(), tops.cofactors.end(),
            [](const BiPoly& a, const BiPoly& b) { return a.to_string() < b.to_string(); });
  tops.cofactors.erase(std::unique(tops.cofactors.begin(), tops.cofactors.end()), tops.cofactors.end());

  std::vector<Mono> lower_c;
  for (const auto& m : monomials_upto(dd - 2)) lower_c.push_back(m);
  std::vector<BiPoly> lower_p;
  for (const auto& m : monomials_upto(n - 1)) lower_p.push_back(BiPoly::term(1, m));
  for (const auto& kappa : tops.cofactors) {
    // Homogeneous solutions of degree n for kappa, in reduced echelon form.
    std::vector<BiPoly> ker;
    for (const auto& b : solution_space(top, kappa, n))
      if (b.degree() == n && b == b.homogeneous_part(n)) ker.push_back(b);
    if (ker.size() == 1) {
      const Pinned st = pin_lower_cofactor(d, ker[0], kappa, dd);
      if (st.impossible) continue;
      std::vector<Mono> still_free;
      for (const auto& m : lower_c)
        if (static_cast<int>(m.degree()) <= st.level) still_free.push_back(m);
      // A fully pinned cofactor is only a candidate; the caller's solution
      // space test decides it.
      if (still_free.empty()) {
        out.cofactors.push_back(st.c);
        continue;
      }
      eliminate_cofactors(d, ker[0], lower_p, st.c, still_free, out);
      continue;
    }
    for (std::size_t i = 0; i < ker.size(); ++i) {
      std::vector<BiPoly> free_p(ker.begin() + static_cast<long>(i) + 1, ker.end());
      free_p.insert(free_p.end(), lower_p.begin(), lower_p.end());
      eliminate_cofactors(d, ker[i], free_p, kappa, lower_c, out);
    }
  }
  std::sort(out.cofactors.begin(), out.cofactors.end(),
            [](const BiPoly& a, const BiPoly& b) { return a.to_string() < b.to_string(); });
  out.cofactors.erase(std::unique(out.cofactors.begin(), out.cofactors.end()), out.cofactors.end());
  return out;
}

bool pencil_order(const BiPoly& a, const BiPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.leading_mono() > b.leading_mono();
}

PencilCert make_pencil(const BiPoly& cofactor, std::vector<BiPoly> basis) {
  std::stable_sort(basis.begin(), basis.end(), pencil_order);
  PencilCert pc;
  pc.cofactor = cofactor;
  if (cofactor.is_zero()) {
    pc.q = BiPoly(Rational(1));
    for (const auto& b : basis)
      if (!b.is_constant()) {
        pc.p = b;
        break;
      }
  } else {
    pc.p = basis[0];
    pc.q = basis[1];
  }
  pc.family = std::move(basis);
  return pc;
}

// Search for a derivation whose components are coprime.
DarbouxReport search_reduced(const Derivation& d, unsigned n_max, bool stop_at_pencil) {
  DarbouxReport rep;
  rep.degree_bound = n_max;
  std::vector<BiPoly> irreducible;  // every accepted one-dimensional solution
  int reached = 0;
  for (int n = 1; n <= static_cast<int>(n_max); ++n) {
    reached = n;
    const auto found = cofactors_at_degree(d, n);
    rep.conjugate_families = rep.conjugate_families || found.irrational;
    if (found.positive_dimensional || found.exhausted) rep.complete_up_to_bound = false;
    for (const auto& c : found.cofactors) {
      const auto space = solution_space(d, c, n);
      const auto below = solution_space(d, c, n - 1);
      if (space.size() == below.size()) continue;
      const std::size_t nonconstant = space.size() - (c.is_zero() ? 1 : 0);
      const bool family = c.is_zero() ? nonconstant >= 1 : nonconstant >= 2;
      if (family) {
        auto existing = std::find_if(rep.pencils.begin(), rep.pencils.end(),
                                     [&](const PencilCert& pc) { return pc.cofactor == c; });
        if (existing != rep.pencils.end()) continue;
        rep.pencils.push_back(make_pencil(c, space));
        std::erase_if(rep.certs, [&](const DarbouxCert& dc) { return dc.cofactor == c; });
        continue;
      }
      // A one-dimensional space. A factorization p = h k into Darboux factors
      // would embed the space of h times k here, so h also spans a
      // one-dimensional space and was met earlier.
      const BiPoly p = space.front().monic();
      const bool reducible =
          std::any_of(irreducible.begin(), irreducible.end(), [&](const BiPoly& h) { return divides(h, p); });
      if (reducible) continue;
      irreducible.push_back(p);
      rep.certs.push_back(DarbouxCert{p, c});
    }
    if (stop_at_pencil && !rep.pencils.empty()) break;
  }
  for (auto& pc : rep.pencils) pc.family = solution_space(d, pc.cofactor, reached);
  for (auto& pc : rep.pencils) std::stable_sort(pc.family.begin(), pc.family.end(), pencil_order);
  return rep;
}

DarbouxReport search(const Derivation& d, unsigned n_max, bool stop_at_pencil) {
  if (d.is_zero()) throw ContractError("darboux_search: the zero derivation has every polynomial as Darboux");
  if (n_max < 1) throw ContractError("darboux_search: degree bound must be at least 1");
  const BiPoly g = gcd(d.dx, d.dy);
  if (g.is_constant()) return search_reduced(d, n_max, stop_at_pencil);
  // d = g d'. An irreducible p with p | d(p) divides g or is Darboux for d'.
  const Derivation reduced{*exact_divide(d.dx, g), *exact_divide(d.dy, g)};
  DarbouxReport rep = search_reduced(reduced, n_max, stop_at_pencil);
  rep.common_factor = g;
  for (auto& dc : rep.certs) dc.cofactor = dc.cofactor * g;
  for (auto& pc : rep.pencils) pc.cofactor = pc.cofactor * g;
  // Factors of g that are not d'-Darboux: gcd(r, d'(r)) collects exactly the
  // d'-Darboux factors of the square-free part r.
  const BiPoly r = squarefree_part(g);
  const BiPoly rest = *exact_divide(r, gcd(r, apply(reduced, r)));
  if (!rest.is_constant()) {
    if (rest.degree() == 1) {
      rep.certs.push_back(DarbouxCert{rest, *exact_divide(apply(d, rest), rest)});
    } else {
      rep.unresolved_factor = rest;
      rep.complete_up_to_bound = false;
    }
  }
  return rep;
}

}  // namespace

DarbouxReport darboux_search(const Derivation& d, unsigned n_max) { return search(d, n_max, false); }

std::optional<PencilCert> first_integral_search(const Derivation& d, unsigned n_max) {
  auto rep = search(d, n_max, true);
  if (rep.pencils.empty()) return std::nullopt;
  return rep.pencils.front();
}

MembersThrough pencil_members_through(const PencilCert& pencil, const std::vector<BiPoly>& gens) {
  if (is_unit_ideal(gens)) throw ContractError("pencil_members_through: the generators have no common zero");
  // Eliminate x, y from gens + (p + t q) under a block order with t last.
  const mpoly::Order ord(3, {2, 1});
  std::vector<mpoly::Poly> sys;
  for (const auto& g : gens)
    if (!g.is_zero()) sys.push_back(to_mpoly(g, 3));
  mpoly::Poly member = to_mpoly(pencil.p, 3);
  mpoly::Poly tq;
  for (auto t : to_mpoly(pencil.q, 3)) {
    ++t.exp[2];
    tq.push_back(std::move(t));
  }
  sys.push_back(mpoly::add(mpoly::normalize(member, ord), mpoly::normalize(tq, ord), ord));
  const auto gb = mpoly::groebner(std::move(sys), ord);
  const auto tail = mpoly::restrict_to_tail(gb, 2);
  if (tail.empty()) return AllMembers{};
  UniPoly cond;
  for (const auto& t : tail.front()) cond += UniPoly::monomial(t.coeff, t.exp[2]);
  FiniteMembers out;
  out.residual = nonrational_part(cond);
  // The elimination ideal describes the closure of the projection; confirm
  // each rational parameter directly.
  for (const auto& t : rational_roots(cond)) {
    BiPoly f = pencil.p + pencil.q * t;
    if (has_common_zero_with(gens, f)) out.members.push_back(PencilMember{t, f});
  }
  if (has_common_zero_with(gens, pencil.q)) out.members.push_back(PencilMember{std::nullopt, pencil.q});
  return out;
}

}  // namespace dop
