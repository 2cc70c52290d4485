#include "dop/ore.hpp"

#include <stdexcept>

#include "dop/arith.hpp"
#include "dop/error.hpp"

namespace dop {

namespace {

Rational binomial(unsigned n, unsigned k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

// d^0(a), ..., d^k(a).
std::vector<BiPoly> iterates(const Derivation& d, const BiPoly& a, unsigned k) {
  std::vector<BiPoly> out{a};
  for (unsigned i = 0; i < k; ++i) out.push_back(apply(d, out.back()));
  return out;
}

bool involves_y(const BiPoly& a) { return a.degree_in(Var::Y) > 0; }

}  // namespace

OreContext OreContext::make(Derivation d, bool univariate) {
  if (univariate && (!d.dy.is_zero() || involves_y(d.dx)))
    throw ContractError("derivation does not preserve Q[x]: d(x) must lie in Q[x] and d(y) must vanish");
  return OreContext{std::move(d), univariate};
}

void OreContext::check(const BiPoly& a) const {
  if (univariate && involves_y(a)) throw ContractError("coefficient " + a.to_string() + " is not in Q[x]");
}

OrePoly::OrePoly(std::vector<BiPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

OrePoly::OrePoly(const BiPoly& a) : coeffs_{a} { trim(); }

OrePoly OrePoly::monomial(const BiPoly& a, unsigned n) {
  std::vector<BiPoly> c(n + 1);
  c[n] = a;
  return OrePoly(std::move(c));
}

void OrePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BiPoly OrePoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

BiPoly OrePoly::leading_coeff() const { return is_zero() ? BiPoly{} : coeffs_.back(); }

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

OrePoly operator*(const BiPoly& a, const OrePoly& f) {
  std::vector<BiPoly> c;
  c.reserve(f.coeffs_.size());
  for (const auto& b : f.coeffs_) c.push_back(a * b);
  return OrePoly(std::move(c));
}

std::string OrePoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BiPoly& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

BiPoly iterate(const Derivation& d, const BiPoly& a, unsigned k) { return iterates(d, a, k).back(); }

OrePoly theta_pow_left(const OreContext& ctx, unsigned n, const BiPoly& a) {
  ctx.check(a);
  const auto it = iterates(ctx.d, a, n);
  std::vector<BiPoly> c(n + 1);
  for (unsigned i = 0; i <= n; ++i) c[i] = it[n - i] * binomial(n, i);
  return OrePoly(std::move(c));
}

OrePoly a_theta_pow_right(const OreContext& ctx, const BiPoly& a, unsigned n) {
  ctx.check(a);
  const auto it = iterates(ctx.d, a, n);
  OrePoly sum;
  for (unsigned i = 0; i <= n; ++i) {
    const Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
    sum += BiPoly(sign * binomial(n, i)) * theta_pow_left(ctx, n - i, it[i]);
  }
  return sum;
}

OrePoly mul(const OreContext& ctx, const OrePoly& f, const OrePoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  for (const auto& c : f.coeffs()) ctx.check(c);
  for (const auto& c : g.coeffs()) ctx.check(c);
  const auto n = static_cast<unsigned>(f.degree());
  std::vector<BiPoly> out(static_cast<std::size_t>(f.degree() + g.degree()) + 1);
  for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
    const BiPoly& b = g.coeffs()[j];
    if (b.is_zero()) continue;
    const auto it = iterates(ctx.d, b, n);
    // a_i t^i b_j t^j = sum_k C(i,k) a_i d^{i-k}(b_j) t^{k+j}
    for (unsigned i = 0; i <= n; ++i) {
      const BiPoly& a = f.coeffs()[i];
      if (a.is_zero()) continue;
      for (unsigned k = 0; k <= i; ++k) {
        if (it[i - k].is_zero()) continue;
        out[k + j] += a * it[i - k] * binomial(i, k);
      }
    }
  }
  return OrePoly(std::move(out));
}

OrePoly mul_stepwise(const OreContext& ctx, const OrePoly& f, const OrePoly& g) {
  OrePoly result;
  OrePoly power = g;  // t^i g
  for (int i = 0; i <= f.degree(); ++i) {
    result += f.coeff(i) * power;
    // t (sum b_j t^j) = sum (b_j t + d(b_j)) t^j
    std::vector<BiPoly> next(power.coeffs().size() + 1);
    for (std::size_t j = 0; j < power.coeffs().size(); ++j) {
      next[j + 1] += power.coeffs()[j];
      next[j] += apply(ctx.d, power.coeffs()[j]);
    }
    power = OrePoly(std::move(next));
  }
  return result;
}

BiPoly act(const OreContext& ctx, const OrePoly& f, const BiPoly& b) {
  ctx.check(b);
  if (f.is_zero()) return {};
  const auto it = iterates(ctx.d, b, static_cast<unsigned>(f.degree()));
  BiPoly out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out += f.coeffs()[i] * it[i];
  return out;
}

BiPoly phi(const OrePoly& f) { return f.coeff(0); }

bool WitnessCert::verify(const OreContext& ctx) const {
  if (r.is_zero() || f.is_zero()) return false;
  const OrePoly lhs = x_elt.pow(static_cast<unsigned>(f.degree() + 1)) * f;
  const OrePoly tx = mul(ctx, OrePoly::theta(), OrePoly(x_elt));
  return lhs == mul(ctx, h, tx) + OrePoly(r * x_elt);
}

namespace {

bool certified_irreducible(const BiPoly& p) {
  if (p.degree() == 1) return true;
  const bool in_x = p.degree_in(Var::Y) <= 0;
  const bool in_y = p.degree_in(Var::X) <= 0;
  if (!in_x && !in_y) return false;
  if (p.degree() != 2 && p.degree() != 3) return false;
  const UniPoly u = in_x ? p.to_uni_x() : p.swap_vars().to_uni_x();
  return rational_roots(u).empty();
}

std::pair<OrePoly, BiPoly> peel(const OreContext& ctx, const OrePoly& f, const BiPoly& x) {
  const int n = f.degree();
  if (n == 0) return {OrePoly{}, f.coeff(0)};
  const auto un = static_cast<unsigned>(n);
  const BiPoly an = f.leading_coeff();
  const OrePoly top = OrePoly::monomial(x.pow(un) * an, un - 1);
  const auto dx = iterates(ctx.d, x, un);
  std::vector<BiPoly> rest(un);
  for (unsigned i = 0; i < un; ++i) rest[i] = x * f.coeff(static_cast<int>(i)) - an * dx[un - i] * binomial(un, i);
  const OrePoly next(std::move(rest));
  if (next.is_zero()) throw std::logic_error("essential_witness: recursion reached zero");
  auto [h, r] = peel(ctx, next, x);
  const BiPoly scale = x.pow(static_cast<unsigned>(n - next.degree() - 1));
  return {top + scale * h, scale * r};
}

}  // namespace

WitnessCert essential_witness(const OreContext& ctx, const OrePoly& f, const BiPoly& x_elt) {
  if (f.is_zero()) throw ContractError("essential_witness: f must be nonzero");
  if (x_elt.is_zero()) throw ContractError("essential_witness: x must be nonzero");
  for (const auto& c : f.coeffs()) ctx.check(c);
  ctx.check(x_elt);
  if (divides(x_elt, f.leading_coeff()))
    throw ContractError("essential_witness: x divides the leading coefficient of f");
  const BiPoly dx = apply(ctx.d, x_elt);
  const bool unit = !dx.is_zero() && dx.is_constant();
  if (!unit) {
    if (x_elt.is_constant() || !certified_irreducible(x_elt))
      throw ContractError("essential_witness: d(x) is not a unit and x is not certified irreducible");
    if (divides(x_elt, dx)) throw ContractError("essential_witness: x is a Darboux element (x divides d(x))");
  }
  auto [h, r] = peel(ctx, f, x_elt);
  return WitnessCert{f, x_elt, std::move(h), std::move(r)};
}

}  // namespace dop
