#pragma once

#include <string>
#include <vector>

#include "dop/bipoly.hpp"
#include "dop/derivation.hpp"

namespace dop {

/// S = R[t; d] with R = Q[x] (univariate) or Q[x, y].
struct OreContext {
  Derivation d;
  bool univariate = false;

  /// Throws ContractError when d does not map the ring into itself.
  static OreContext make(Derivation d, bool univariate);
  /// Throws ContractError when a lies outside the ring.
  void check(const BiPoly& a) const;
};

/// Left-normal form sum a_i t^i, coefficients lowest power first, no trailing zeros.
class OrePoly {
 public:
  static constexpr int kZeroDegree = -1;

  OrePoly() = default;
  explicit OrePoly(std::vector<BiPoly> coeffs);
  explicit OrePoly(const BiPoly& a);
  /// a t^n
  static OrePoly monomial(const BiPoly& a, unsigned n);
  static OrePoly theta() { return monomial(BiPoly(Rational(1)), 1); }

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<BiPoly>& coeffs() const { return coeffs_; }
  [[nodiscard]] BiPoly coeff(int i) const;
  [[nodiscard]] BiPoly leading_coeff() const;

  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  /// Ring element times f on the left; coefficients commute with it.
  friend OrePoly operator*(const BiPoly& a, const OrePoly& f);
  friend bool operator==(const OrePoly&, const OrePoly&) = default;

  /// `(c_n)t^n + ... + (c_1)t + (c_0)`, zero coefficients omitted, "0" for zero.
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  std::vector<BiPoly> coeffs_;
};

/// d^k(a).
BiPoly iterate(const Derivation& d, const BiPoly& a, unsigned k);

/// t^n a = sum_i C(n,i) d^{n-i}(a) t^i.
OrePoly theta_pow_left(const OreContext& ctx, unsigned n, const BiPoly& a);

/// Evaluates sum_i (-1)^i C(n,i) t^{n-i} d^i(a) in left-normal form; equals a t^n.
OrePoly a_theta_pow_right(const OreContext& ctx, const BiPoly& a, unsigned n);

OrePoly mul(const OreContext& ctx, const OrePoly& f, const OrePoly& g);

/// Product by repeated use of t a = a t + d(a), one t at a time.
OrePoly mul_stepwise(const OreContext& ctx, const OrePoly& f, const OrePoly& g);

/// (sum a_i t^i) . b = sum a_i d^i(b).
BiPoly act(const OreContext& ctx, const OrePoly& f, const BiPoly& b);

/// a_0, the image of f under f -> f . 1.
BiPoly phi(const OrePoly& f);

struct WitnessCert {
  OrePoly f;
  BiPoly x_elt;
  OrePoly h;
  BiPoly r;

  /// x^{deg f + 1} f = h t x + r x in S, with r != 0.
  [[nodiscard]] bool verify(const OreContext& ctx) const;
  friend bool operator==(const WitnessCert&, const WitnessCert&) = default;
};

/// (h, r) with x^{n+1} f = h t x + r x, n = deg f, obtained by peeling the
/// top coefficient and recursing. Requires f != 0, x nonzero not dividing the
/// leading coefficient, and either d(x) a nonzero constant or x irreducible
/// with x not dividing d(x). Irreducibility is only certified for linear x
/// and for univariate x of degree 2 or 3 without rational roots.
WitnessCert essential_witness(const OreContext& ctx, const OrePoly& f, const BiPoly& x_elt);

}  // namespace dop
