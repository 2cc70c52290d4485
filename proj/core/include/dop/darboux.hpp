#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "dop/derivation.hpp"

namespace dop {

/// d(p) = cofactor * p with p monic, nonconstant and Q-irreducible.
struct DarbouxCert {
  BiPoly p;
  BiPoly cofactor;

  [[nodiscard]] bool verify(const Derivation& d) const;
  friend bool operator==(const DarbouxCert&, const DarbouxCert&) = default;
};

/// Two non-proportional solutions of d(f) = cofactor * f, so p/q is a
/// rational first integral. `family` is a basis of every solution of degree
/// at most the search bound with this cofactor; p and q are its first two
/// elements (q = 1 for a polynomial first integral).
struct PencilCert {
  BiPoly p;
  BiPoly q;
  BiPoly cofactor;
  std::vector<BiPoly> family;

  [[nodiscard]] bool verify(const Derivation& d) const;
  friend bool operator==(const PencilCert&, const PencilCert&) = default;
};

struct DarbouxReport {
  std::vector<DarbouxCert> certs;
  std::vector<PencilCert> pencils;
  unsigned degree_bound = 0;
  bool complete_up_to_bound = true;
  /// gcd(dx, dy), monic. The search runs on d / common_factor.
  BiPoly common_factor{Rational(1)};
  /// Product of the factors of common_factor that are not Darboux for the
  /// reduced derivation and could not be split into irreducibles; 1 if none.
  BiPoly unresolved_factor{Rational(1)};
  /// Some degree admitted cofactors with irrational coefficients: Darboux
  /// curves defined only over an extension of Q.
  bool conjugate_families = false;
};

/// Every monic Q-irreducible Darboux polynomial of degree <= n_max, with
/// one-parameter and larger families reported as pencils.
DarbouxReport darboux_search(const Derivation& d, unsigned n_max);

/// The first pencil found while ascending in degree up to n_max.
std::optional<PencilCert> first_integral_search(const Derivation& d, unsigned n_max);

struct PencilMember {
  std::optional<Rational> t;  // nullopt is the point at infinity, the member q
  BiPoly member;
  friend bool operator==(const PencilMember&, const PencilMember&) = default;
};
struct FiniteMembers {
  std::vector<PencilMember> members;
  /// Square-free factor of the parameter condition without rational roots;
  /// constant when every parameter value is rational.
  UniPoly residual;
  friend bool operator==(const FiniteMembers&, const FiniteMembers&) = default;
};
struct AllMembers {
  friend bool operator==(AllMembers, AllMembers) = default;
};
using MembersThrough = std::variant<FiniteMembers, AllMembers>;

/// Members p + t q (t rational or infinite) whose curve meets V(gens).
/// gens must generate a proper ideal.
MembersThrough pencil_members_through(const PencilCert& pencil, const std::vector<BiPoly>& gens);

}  // namespace dop
