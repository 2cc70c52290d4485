#include "dop/unipoly.hpp"

#include <algorithm>
#include <optional>

#include "dop/error.hpp"
#include "render.hpp"

namespace dop {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly::UniPoly(const Rational& c) {
  if (!dop::is_zero(c)) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  if (dop::is_zero(c)) return {};
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && dop::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational UniPoly::leading_coeff() const { return is_zero() ? Rational(0) : coeffs_.back(); }

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  UniPoly r = *this;
  const Rational lc = leading_coeff();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

UniPoly UniPoly::pow(unsigned n) const {
  UniPoly result(Rational(1));
  UniPoly base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (dop::is_zero(c)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (dop::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(std::string_view var) const {
  std::vector<std::pair<Rational, std::string>> terms;
  const char v = var.empty() ? 'x' : var.front();
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (dop::is_zero(c)) continue;
    terms.emplace_back(c, detail::power_text(v, k));
  }
  return detail::render_terms(terms);
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw ContractError("univariate division by zero polynomial");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  const Rational lc = b.leading_coeff();
  if (a.degree() < db) return {UniPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lc;
    if (dop::is_zero(c)) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coeff(j);
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly u = a;
  UniPoly v = b;
  while (!v.is_zero()) {
    UniPoly r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

bool divides(const UniPoly& b, const UniPoly& a) { return divmod(a, b).second.is_zero(); }

namespace {

// Primitive integer polynomial with positive leading coefficient, returned as
// a rational-coefficient UniPoly whose coefficients are all integers.
UniPoly integer_primitive(const UniPoly& p) {
  Integer den = 1;
  for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
  std::vector<Rational> v;
  v.reserve(p.coeffs().size());
  Integer content = 0;
  for (const auto& c : p.coeffs()) {
    Rational s = c * den;
    v.push_back(s);
    content = gcd(content, Integer(s.get_num()));
  }
  if (sgn(v.back()) < 0) content = -content;
  for (auto& c : v) c /= content;
  return UniPoly(std::move(v));
}

std::vector<UniPoly> sturm_sequence(const UniPoly& f) {
  std::vector<UniPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int sign_variations(const std::vector<UniPoly>& seq, const Rational& at) {
  int count = 0;
  int last = 0;
  for (const auto& p : seq) {
    const int s = sgn(p.evaluate(at));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

struct Isolation {
  std::vector<Rational> roots;
  std::optional<Rational> hit;  // exact root met at a bisection point
};

// Rational roots of a square-free integer polynomial f with f(0) != 0, by
// Sturm bisection. A root p/q of a primitive integer polynomial has q
// dividing the leading coefficient, so an isolating interval narrower than
// 1/lc contains at most one candidate.
void isolate(const UniPoly& f, const std::vector<UniPoly>& seq, const Rational& lo,
             const Rational& hi, int count, const Rational& lead, Isolation& out) {
  if (count == 0 || out.hit) return;
  if (count == 1 && (hi - lo) * lead < 1) {
    const Rational scaled = hi * lead;
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    const Rational cand = Rational(k) / lead;
    if (cand > lo && cand <= hi && sgn(f.evaluate(cand)) == 0) out.roots.push_back(cand);
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sgn(f.evaluate(mid)) == 0) {
    out.hit = mid;
    return;
  }
  const int vlo = sign_variations(seq, lo);
  const int vmid = sign_variations(seq, mid);
  const int vhi = sign_variations(seq, hi);
  isolate(f, seq, lo, mid, vlo - vmid, lead, out);
  isolate(f, seq, mid, hi, vmid - vhi, lead, out);
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw ContractError("rational_roots of the zero polynomial");
  std::vector<Rational> roots;
  UniPoly f = divmod(p, gcd(p, p.derivative())).first;
  if (!f.is_constant() && dop::is_zero(f.coeff(0))) {
    roots.emplace_back(0);
    f = divmod(f, UniPoly::variable()).first;
  }
  while (!f.is_constant()) {
    f = integer_primitive(f);
    const Rational lead = f.leading_coeff();
    Rational bound = 0;
    for (const auto& c : f.coeffs()) bound = std::max(bound, Rational(abs(c) / lead));
    bound += 1;
    const auto seq = sturm_sequence(f);
    Isolation iso;
    const int total = sign_variations(seq, -bound) - sign_variations(seq, bound);
    isolate(f, seq, -bound, bound, total, lead, iso);
    if (!iso.hit) {
      roots.insert(roots.end(), iso.roots.begin(), iso.roots.end());
      break;
    }
    // Deflate by the exact root found at a bisection point and restart so that
    // interval endpoints are never roots.
    roots.push_back(*iso.hit);
    f = divmod(f, UniPoly{-*iso.hit, Rational(1)}).first;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

UniPoly nonrational_part(const UniPoly& p) {
  UniPoly f = divmod(p, gcd(p, p.derivative())).first;
  for (const auto& r : rational_roots(f)) f = divmod(f, UniPoly{-r, Rational(1)}).first;
  return f.monic();
}

}  // namespace dop
