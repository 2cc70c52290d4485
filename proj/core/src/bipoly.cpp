#include "dop/bipoly.hpp"

#include <algorithm>

#include "render.hpp"

namespace dop {

BiPoly::BiPoly(const Rational& c) {
  if (!dop::is_zero(c)) terms_.emplace(Mono{}, c);
}

BiPoly::BiPoly(std::initializer_list<std::pair<const Mono, Rational>> terms) {
  for (const auto& [m, c] : terms) add_scaled(BiPoly(Rational(1)), c, m);
}

BiPoly BiPoly::term(const Rational& c, Mono m) {
  BiPoly p;
  if (!dop::is_zero(c)) p.terms_.emplace(m, c);
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, Var v) {
  BiPoly r;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (dop::is_zero(c)) continue;
    const auto e = static_cast<std::uint32_t>(k);
    r.terms_.emplace(v == Var::X ? Mono{e, 0} : Mono{0, e}, c);
  }
  return r;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
}

Rational BiPoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree() const {
  return terms_.empty() ? kZeroDegree : static_cast<int>(terms_.begin()->first.degree());
}

int BiPoly::degree_in(Var v) const {
  int d = kZeroDegree;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(v == Var::X ? m.i : m.j));
  return d;
}

Mono BiPoly::leading_mono() const { return terms_.empty() ? Mono{} : terms_.begin()->first; }

Rational BiPoly::leading_coeff() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational BiPoly::constant_value() const { return coeff(Mono{}); }

BiPoly BiPoly::derivative(Var v) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    const std::uint32_t e = v == Var::X ? m.i : m.j;
    if (e == 0) continue;
    const Mono d = v == Var::X ? Mono{m.i - 1, m.j} : Mono{m.i, m.j - 1};
    r.terms_.emplace(d, c * static_cast<unsigned long>(e));
  }
  return r;
}

BiPoly BiPoly::monic() const {
  if (is_zero()) return {};
  BiPoly r = *this;
  r *= 1 / leading_coeff();
  return r;
}

BiPoly BiPoly::pow(unsigned n) const {
  BiPoly result(Rational(1));
  BiPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

BiPoly BiPoly::swap_vars() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Mono{m.j, m.i}, c);
  return r;
}

Rational BiPoly::evaluate(const Rational& x, const Rational& y) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::uint32_t k = 0; k < m.i; ++k) t *= x;
    for (std::uint32_t k = 0; k < m.j; ++k) t *= y;
    acc += t;
  }
  return acc;
}

BiPoly BiPoly::homogeneous_part(int degree) const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    if (static_cast<int>(m.degree()) == degree) r.terms_.emplace(m, c);
  return r;
}

std::vector<UniPoly> BiPoly::coeffs_in(Var v) const {
  const int d = degree_in(v);
  if (d < 0) return {};
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, c] : terms_) {
    const std::uint32_t outer = v == Var::X ? m.i : m.j;
    const std::uint32_t inner = v == Var::X ? m.j : m.i;
    auto& row = dense[outer];
    if (row.size() <= inner) row.resize(inner + 1);
    row[inner] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

BiPoly BiPoly::from_coeffs_in(const std::vector<UniPoly>& coeffs, Var v) {
  BiPoly r;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& row = coeffs[k].coeffs();
    for (std::size_t l = 0; l < row.size(); ++l) {
      if (dop::is_zero(row[l])) continue;
      const auto o = static_cast<std::uint32_t>(k);
      const auto in = static_cast<std::uint32_t>(l);
      r.terms_.emplace(v == Var::X ? Mono{o, in} : Mono{in, o}, row[l]);
    }
  }
  return r;
}

UniPoly BiPoly::to_uni_x() const {
  const auto rows = coeffs_in(Var::Y);
  return rows.empty() ? UniPoly{} : rows.front();
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  add_scaled(o, Rational(1), Mono{});
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  add_scaled(o, Rational(-1), Mono{});
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (dop::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void BiPoly::add_scaled(const BiPoly& o, const Rational& c, Mono shift) {
  if (dop::is_zero(c)) return;
  for (const auto& [m, v] : o.terms_) {
    const Mono t = m * shift;
    auto [it, inserted] = terms_.try_emplace(t, v * c);
    if (inserted) continue;
    it->second += v * c;
    if (dop::is_zero(it->second)) terms_.erase(it);
  }
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  const BiPoly& outer = a.size() <= b.size() ? a : b;
  const BiPoly& inner = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : outer.terms_) r.add_scaled(inner, c, m);
  return r;
}

std::string BiPoly::to_string() const {
  std::vector<std::pair<Rational, std::string>> parts;
  parts.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    std::string x = detail::power_text('x', m.i);
    std::string y = detail::power_text('y', m.j);
    if (!x.empty() && !y.empty()) x += "*";
    parts.emplace_back(c, x + y);
  }
  return detail::render_terms(parts);
}

}  // namespace dop
