#include "dop/mpoly.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "dop/error.hpp"

namespace dop::mpoly {

Order::Order(std::size_t nvars, std::vector<std::size_t> block_sizes)
    : nvars_(nvars), blocks_(std::move(block_sizes)) {
  if (std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0}) != nvars_) {
    throw ContractError("monomial order blocks do not cover all variables");
  }
}

std::size_t Order::block_of(std::size_t v) const {
  std::size_t start = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    start += blocks_[b];
    if (v < start) return b;
  }
  return blocks_.size() - 1;
}

std::strong_ordering Order::compare(const Exp& a, const Exp& b) const {
  std::size_t start = 0;
  for (std::size_t size : blocks_) {
    const std::size_t end = start + size;
    unsigned da = 0;
    unsigned db = 0;
    for (std::size_t v = start; v < end; ++v) {
      da += a[v];
      db += b[v];
    }
    if (da != db) return da <=> db;
    for (std::size_t v = end; v-- > start;) {
      if (a[v] != b[v]) return b[v] <=> a[v];
    }
    start = end;
  }
  return std::strong_ordering::equal;
}

unsigned total_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0U); }

Poly constant(std::size_t nvars, const Rational& c) {
  if (dop::is_zero(c)) return {};
  return {Term{Exp(nvars, 0), c}};
}

Poly variable(std::size_t nvars, std::size_t v) {
  Exp e(nvars, 0);
  e[v] = 1;
  return {Term{std::move(e), Rational(1)}};
}

namespace {

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] > b[v]) return false;
  return true;
}

bool coprime(const Exp& a, const Exp& b) {
  for (std::size_t v = 0; v < a.size(); ++v)
    if (a[v] != 0 && b[v] != 0) return false;
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = std::max(a[v], b[v]);
  return out;
}

Exp quotient(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) out[v] = static_cast<std::uint16_t>(a[v] - b[v]);
  return out;
}

Exp product(const Exp& a, const Exp& b) {
  Exp out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) {
    const unsigned s = unsigned{a[v]} + b[v];
    if (s > 0xFFFFU) throw LimitError("exponent overflow in multivariate arithmetic");
    out[v] = static_cast<std::uint16_t>(s);
  }
  return out;
}

// p - c * x^m * g, merging sorted term lists.
Poly sub_mul(const Poly& p, const Rational& c, const Exp& m, const Poly& g, const Order& ord) {
  Poly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Exp shifted;
  bool have = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have) {
      shifted = product(g[j].exp, m);
      have = true;
    }
    if (j >= g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    if (i >= p.size()) {
      out.push_back(Term{shifted, -c * g[j].coeff});
      ++j;
      have = false;
      continue;
    }
    const auto cmp = ord.compare(p[i].exp, shifted);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{shifted, -c * g[j].coeff});
      ++j;
      have = false;
    } else {
      Rational v = p[i].coeff - c * g[j].coeff;
      if (!dop::is_zero(v)) out.push_back(Term{shifted, std::move(v)});
      ++i;
      ++j;
      have = false;
    }
  }
  return out;
}

using View = std::vector<const Poly*>;

const Poly* find_reducer(const Exp& e, const View& basis) {
  for (const Poly* g : basis)
    if (!g->empty() && divides(g->front().exp, e)) return g;
  return nullptr;
}

View view_of(const std::vector<Poly>& basis) {
  View v;
  v.reserve(basis.size());
  for (const auto& g : basis) v.push_back(&g);
  return v;
}

}  // namespace

Poly add(const Poly& a, const Poly& b, const Order& ord) {
  return sub_mul(a, Rational(-1), Exp(ord.nvars(), 0), b, ord);
}

Poly sub(const Poly& a, const Poly& b, const Order& ord) {
  return sub_mul(a, Rational(1), Exp(ord.nvars(), 0), b, ord);
}

Poly mul(const Poly& a, const Poly& b, const Order& ord) {
  Poly out;
  for (const auto& t : a) out = sub_mul(out, -t.coeff, t.exp, b, ord);
  return out;
}

Poly scale(Poly a, const Rational& c) {
  if (dop::is_zero(c)) return {};
  for (auto& t : a) t.coeff *= c;
  return a;
}

Poly monic(Poly a) {
  if (a.empty()) return a;
  const Rational inv = 1 / a.front().coeff;
  return scale(std::move(a), inv);
}

Poly normalize(Poly a, const Order& ord) {
  std::sort(a.begin(), a.end(), [&](const Term& l, const Term& r) { return ord.compare(l.exp, r.exp) > 0; });
  Poly out;
  for (auto& t : a) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coeff += t.coeff;
      if (dop::is_zero(out.back().coeff)) out.pop_back();
    } else if (!dop::is_zero(t.coeff)) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxCoeffBits = 1U << 12;

bool oversized(const Rational& c) {
  return mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2) > kMaxCoeffBits;
}

// Reduces only while the leading term is reducible. A bounded reduction throws
// LimitError once a leading coefficient outgrows kMaxCoeffBits.
Poly top_reduce(Poly p, const View& basis, const Order& ord, bool bounded = false) {
  while (!p.empty()) {
    if (bounded && oversized(p.front().coeff)) throw LimitError("groebner: coefficient size budget exhausted");
    const Poly* g = find_reducer(p.front().exp, basis);
    if (g == nullptr) break;
    p = sub_mul(p, p.front().coeff / g->front().coeff, quotient(p.front().exp, g->front().exp), *g, ord);
  }
  return p;
}

}  // namespace

namespace {

Poly full_reduce(const Poly& p, const View& basis, const Order& ord, bool bounded = false) {
  Poly rest = p;
  Poly done;
  while (!rest.empty()) {
    rest = top_reduce(std::move(rest), basis, ord, bounded);
    if (rest.empty()) break;
    done.push_back(rest.front());
    rest.erase(rest.begin());
  }
  return done;
}

}  // namespace

Poly normal_form(const Poly& p, const std::vector<Poly>& basis, const Order& ord) {
  return full_reduce(p, view_of(basis), ord);
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Exp lcm;
  unsigned degree;
};

// Gebauer-Moeller update: adds the pairs of the new element h = polys[k] and
// prunes existing pairs made redundant by it.
void update(const std::deque<Poly>& polys, std::vector<std::size_t>& active, std::vector<Pair>& pairs,
            std::size_t k) {
  const Exp& lh = polys[k].front().exp;
  std::vector<Pair> fresh;
  for (std::size_t g : active) {
    Exp l = lcm(lh, polys[g].front().exp);
    const unsigned d = total_degree(l);
    fresh.push_back(Pair{g, k, std::move(l), d});
  }
  // Criterion M: drop (h, g) when another (h, g') has an lcm properly dividing it.
  std::vector<bool> keep(fresh.size(), true);
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (coprime(lh, polys[fresh[a].i].front().exp)) continue;
    for (std::size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || !keep[b]) continue;
      if (divides(fresh[b].lcm, fresh[a].lcm) && (fresh[b].lcm != fresh[a].lcm || b < a)) {
        keep[a] = false;
        break;
      }
    }
  }
  // Criterion F plus Buchberger's first criterion: among equal lcms keep one,
  // and drop coprime pairs entirely.
  std::vector<Pair> kept;
  for (std::size_t a = 0; a < fresh.size(); ++a) {
    if (!keep[a]) continue;
    if (coprime(lh, polys[fresh[a].i].front().exp)) continue;
    kept.push_back(std::move(fresh[a]));
  }
  // Criterion B: old pairs whose lcm is divisible by lm(h) and differs from
  // both new lcms are redundant.
  std::erase_if(pairs, [&](const Pair& p) {
    if (!divides(lh, p.lcm)) return false;
    const Exp li = lcm(polys[p.i].front().exp, lh);
    const Exp lj = lcm(polys[p.j].front().exp, lh);
    return li != p.lcm && lj != p.lcm;
  });
  for (auto& p : kept) pairs.push_back(std::move(p));
  std::erase_if(active, [&](std::size_t g) { return divides(lh, polys[g].front().exp); });
  active.push_back(k);
}

Poly s_poly(const Poly& f, const Poly& g, const Exp& l, const Order& ord) {
  Poly a = sub_mul(Poly{}, Rational(-1) / f.front().coeff, quotient(l, f.front().exp), f, ord);
  return sub_mul(a, Rational(1) / g.front().coeff, quotient(l, g.front().exp), g, ord);
}

}  // namespace

std::vector<Poly> groebner(std::vector<Poly> gens, const Order& ord, std::size_t max_pairs) {
  std::deque<Poly> polys;  // stable addresses for the reducer views
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  for (auto& g : gens) g = normalize(std::move(g), ord);
  std::erase_if(gens, [](const Poly& p) { return p.empty(); });
  if (gens.empty()) throw ContractError("groebner basis of the zero ideal");
  std::sort(gens.begin(), gens.end(),
            [&](const Poly& a, const Poly& b) { return ord.compare(a.front().exp, b.front().exp) < 0; });
  auto basis_view = [&] {
    View view;
    view.reserve(active.size());
    for (std::size_t g : active) view.push_back(&polys[g]);
    return view;
  };
  for (auto& g : gens) {
    Poly h = monic(top_reduce(std::move(g), basis_view(), ord));
    if (h.empty()) continue;
    polys.push_back(std::move(h));
    update(polys, active, pairs, polys.size() - 1);
  }
  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > max_pairs) throw LimitError("groebner: pair budget exhausted");
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      return ord.compare(a.lcm, b.lcm) < 0;
    });
    const Pair pr = *best;
    pairs.erase(best);
    Poly h = full_reduce(s_poly(polys[pr.i], polys[pr.j], pr.lcm, ord), basis_view(), ord, true);
    if (h.empty()) continue;
    h = monic(std::move(h));
    if (std::any_of(h.begin(), h.end(), [](const Term& t) { return oversized(t.coeff); }))
      throw LimitError("groebner: coefficient size budget exhausted");
    if (total_degree(h.front().exp) == 0) {
      return {constant(ord.nvars(), Rational(1))};
    }
    polys.push_back(std::move(h));
    update(polys, active, pairs, polys.size() - 1);
  }
  // Minimal basis, then tail-reduce each element against the others.
  const View minimal = basis_view();
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    View others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(monic(full_reduce(*minimal[a], others, ord, true)));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return ord.compare(a.front().exp, b.front().exp) > 0; });
  return reduced;
}

std::vector<Poly> restrict_to_tail(const std::vector<Poly>& basis, std::size_t first_var) {
  std::vector<Poly> out;
  for (const auto& g : basis) {
    const bool tail_only = std::all_of(g.begin(), g.end(), [&](const Term& t) {
      for (std::size_t v = 0; v < first_var; ++v)
        if (t.exp[v] != 0) return false;
      return true;
    });
    if (tail_only) out.push_back(g);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& t : p) {
    if (!out.empty()) out += sgn(t.coeff) < 0 ? " - " : " + ";
    else if (sgn(t.coeff) < 0) out += "-";
    out += Rational(abs(t.coeff)).get_str();
    for (std::size_t v = 0; v < t.exp.size(); ++v) {
      if (t.exp[v] == 0) continue;
      out += "*v" + std::to_string(v);
      if (t.exp[v] > 1) out += "^" + std::to_string(t.exp[v]);
    }
  }
  return out;
}

}  // namespace dop::mpoly
