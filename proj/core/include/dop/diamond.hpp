#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dop/darboux.hpp"
#include "dop/derivation.hpp"

namespace dop {

/// Q[x], Q[x, x^-1] or Q[x, y]. Univariate families carry dx only, with dx in
/// Q[x] and dy = 0.
enum class RingSpec { PolyUni, LaurentUni, PolyBi };

std::string to_string(RingSpec r);

enum class Status { Diamond, NotDiamond, Unknown };

std::string to_string(Status s);

struct NotPrimitive {
  PencilCert pencil;
};
struct PrimitiveEvidence {
  unsigned bound;  // no pencil of degree <= bound
};
struct PrimitiveCertified {
  ShamsuddinResult reason;
};
using PrimitivityVerdict = std::variant<NotPrimitive, PrimitiveEvidence, PrimitiveCertified>;

enum class Generator { Dx, Dy };

/// One Darboux element checked against V(dx, dy).
struct Incidence {
  enum class Source { Cert, Member, GenericMember };
  Source source = Source::Cert;
  BiPoly p;
  /// Member p + t q of a pencil; nullopt t with Source::Member is q itself.
  /// For GenericMember, t is symbolic and q is stored.
  std::optional<Rational> t;
  BiPoly q;
  bool meets_locus = false;
  bool divides_dx = false;
  bool divides_dy = false;
  /// Q-irreducibility of p is proven: degree one, or a cert of a complete search.
  bool irreducible = false;

  [[nodiscard]] bool violates() const { return meets_locus && !(divides_dx && divides_dy); }
};

struct SingularLocusReport {
  bool locus_proper = false;
  std::vector<Incidence> incidences;
  /// A pencil parameter condition or a cofactor system had irrational
  /// solutions, so some Darboux curves were not audited.
  bool residual_nonrational = false;

  [[nodiscard]] bool verify(const Derivation& d) const;
};

struct CommutativeCase {
  [[nodiscard]] bool verify(const Derivation& d) const;
};
struct LocallyNilpotent {
  unsigned k;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
/// Laurent dx = alpha x^n: Q[x, x^-1] is delta-simple.
struct LaurentMonomial {
  Rational alpha;
  unsigned n;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
/// Laurent dx in Q[x] not a monomial: the non-monomial factor of dx
/// generates a proper nonzero delta-ideal.
struct LaurentProperIdeal {
  UniPoly generator;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
struct UniConstant {
  Rational alpha;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
/// Q[x][theta; alpha x^n d/dx] with n >= 1.
struct UniMonomialMusson {
  Rational alpha;
  unsigned n;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
struct ShamsuddinVerdict {
  ShamsuddinResult result;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
/// Q[x, y] is delta-simple of Krull dimension two.
struct DeltaSimpleKdim2 {
  [[nodiscard]] bool verify(const Derivation& d) const;
};
struct PrimitivityBased {
  PrimitivityVerdict verdict;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
/// (dx, dy) is the unit ideal, so no maximal ideal is a delta-ideal, and the
/// pencil shows S is not primitive.
struct NoMaxDeltaIdealAndNotPrimitive {
  PencilCert pencil;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
/// p is Darboux, meets V(dx, dy), and does not divide `fails`.
struct SingularViolation {
  BiPoly p;
  Generator fails;
  [[nodiscard]] bool verify(const Derivation& d) const;
};
struct SingularLocusAudit {
  SingularLocusReport report;
  [[nodiscard]] bool verify(const Derivation& d) const;
};

using Certificate =
    std::variant<CommutativeCase, LocallyNilpotent, LaurentMonomial, LaurentProperIdeal, UniConstant,
                 UniMonomialMusson, ShamsuddinVerdict, DeltaSimpleKdim2, PrimitivityBased,
                 NoMaxDeltaIdealAndNotPrimitive, SingularViolation, SingularLocusAudit>;

/// Re-checks a certificate from its stored data.
bool verify(const Certificate& c, const Derivation& d);
/// Stable tag naming the rule a certificate applies, e.g. "locally-nilpotent".
std::string tag(const Certificate& c);

struct Verdict {
  Status status = Status::Unknown;
  bool certified = false;
  unsigned evidence_bound = 0;
  std::vector<Certificate> trace;
};

/// Whether S = R[theta; d] satisfies the essential-extension property.
Verdict decide(RingSpec spec, const Derivation& d, unsigned darboux_bound = 6, unsigned nilpotency_bound = 50);

PrimitivityVerdict classify_primitivity(const Derivation& d, unsigned n);

/// Audits every cert and pencil member of `report` against V(dx, dy), which
/// must be nonempty.
SingularLocusReport singular_darboux_audit(const Derivation& d, const DarbouxReport& report);

/// delta-simplicity of Q[x] or Q[x, x^-1].
bool delta_simple_dim1_check(RingSpec spec, const Derivation& d);

/// Throws ContractError unless d is a derivation of the ring family.
void check_ring(RingSpec spec, const Derivation& d);

}  // namespace dop
