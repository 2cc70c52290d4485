#pragma once

#include <random>
#include <string_view>

#include "dop/bipoly.hpp"
#include "dop/cli/parse.hpp"

namespace dop::test {

inline BiPoly P(std::string_view s) { return cli::parse_bipoly(s); }
inline UniPoly U(std::string_view s) { return cli::parse_unipoly(s); }

inline Rational random_rational(std::mt19937_64& rng, long span = 5) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 3);
  return make_rational(num(rng), den(rng));
}

/// Random bivariate polynomial of total degree <= deg with about `density` of
/// the monomials present.
inline BiPoly random_bipoly(std::mt19937_64& rng, unsigned deg, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  BiPoly p;
  for (unsigned i = 0; i <= deg; ++i)
    for (unsigned j = 0; i + j <= deg; ++j)
      if (keep(rng)) p += BiPoly::term(random_rational(rng), Mono{i, j});
  return p;
}

inline UniPoly random_unipoly(std::mt19937_64& rng, unsigned deg) {
  std::vector<Rational> c;
  for (unsigned k = 0; k <= deg; ++k) c.push_back(random_rational(rng));
  return UniPoly(std::move(c));
}

}  // namespace dop::test
