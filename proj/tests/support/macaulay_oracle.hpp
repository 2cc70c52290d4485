#pragma once

// Ideal membership and truncated ideal dimensions by plain linear algebra on
// Macaulay matrices. Deliberately shares nothing with the Groebner engine or
// the core linear-algebra module.

#include <map>
#include <vector>

#include "dop/bipoly.hpp"

namespace dop::test {

namespace macaulay_detail {

inline std::vector<Mono> monomials_upto(unsigned deg) {
  std::vector<Mono> out;
  for (unsigned d = 0; d <= deg; ++d)
    for (unsigned i = 0; i <= d; ++i) out.push_back(Mono{d - i, i});
  return out;
}

// Row-reduces the augmented rows in place, returns the rank of the first
// `cols` columns and whether the system (last column as right-hand side) is
// consistent.
inline std::pair<std::size_t, bool> eliminate(std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < a[r].size(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  bool consistent = true;
  for (std::size_t r = rank; r < a.size(); ++r)
    if (a[r].size() > cols && sgn(a[r][cols]) != 0) consistent = false;
  return {rank, consistent};
}

}  // namespace macaulay_detail

/// True when p = sum a_k f_k with every deg a_k <= cofactor_degree.
inline bool macaulay_member(const std::vector<BiPoly>& f, const BiPoly& p, unsigned cofactor_degree) {
  using namespace macaulay_detail;
  const auto shifts = monomials_upto(cofactor_degree);
  int top = p.degree();
  for (const auto& g : f) top = std::max(top, g.degree() + static_cast<int>(cofactor_degree));
  const auto rows = monomials_upto(static_cast<unsigned>(std::max(top, 0)));
  std::map<Mono, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) index[rows[r]] = r;
  const std::size_t cols = shifts.size() * f.size();
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(cols + 1));
  std::size_t col = 0;
  for (const auto& g : f)
    for (const auto& s : shifts) {
      for (const auto& [m, c] : g.terms()) a[index.at(m * s)][col] = c;
      ++col;
    }
  for (const auto& [m, c] : p.terms()) a[index.at(m)][cols] = c;
  return eliminate(a, cols).second;
}

/// dim of { sum a_k f_k : deg a_k <= cofactor_degree } intersected with the
/// polynomials of total degree <= k.
inline std::size_t macaulay_truncated_dim(const std::vector<BiPoly>& f, unsigned k,
                                          unsigned cofactor_degree) {
  using namespace macaulay_detail;
  const auto shifts = monomials_upto(cofactor_degree);
  int top = 0;
  for (const auto& g : f) top = std::max(top, g.degree() + static_cast<int>(cofactor_degree));
  const auto rows = monomials_upto(static_cast<unsigned>(top));
  std::map<Mono, std::size_t> index;
  for (std::size_t r = 0; r < rows.size(); ++r) index[rows[r]] = r;
  // Columns are combinations; row-reduce the transpose so that each
  // combination is a row vector over monomials ordered high degree first.
  std::vector<std::vector<Rational>> gens;
  for (const auto& g : f)
    for (const auto& s : shifts) {
      std::vector<Rational> v(rows.size());
      for (const auto& [m, c] : g.terms()) v[rows.size() - 1 - index.at(m * s)] = c;
      gens.push_back(std::move(v));
    }
  const std::size_t high = rows.size() - monomials_upto(k).size();
  eliminate(gens, rows.size());
  // After elimination with high-degree columns first, rows whose pivot lies
  // in a low-degree column span the truncated subspace.
  std::size_t dim = 0;
  for (const auto& r : gens) {
    std::size_t lead = 0;
    while (lead < r.size() && sgn(r[lead]) == 0) ++lead;
    if (lead < r.size() && lead >= high) ++dim;
  }
  return dim;
}

}  // namespace dop::test
