#include "dop/diamond.hpp"

#include <algorithm>

#include "dop/arith.hpp"
#include "dop/error.hpp"
#include "dop/groebner.hpp"

namespace dop {

std::string to_string(RingSpec r) {
  switch (r) {
    case RingSpec::PolyUni: return "poly1";
    case RingSpec::LaurentUni: return "laurent";
    case RingSpec::PolyBi: return "poly2";
  }
  return "";
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Diamond: return "Diamond";
    case Status::NotDiamond: return "NotDiamond";
    case Status::Unknown: return "Unknown";
  }
  return "";
}

namespace {

struct Monomial {
  Rational alpha;
  unsigned n;
};

// dx = alpha x^n with alpha != 0.
std::optional<Monomial> as_monomial(const BiPoly& dx) {
  if (dx.size() != 1 || dx.degree_in(Var::Y) > 0) return std::nullopt;
  const auto& [m, c] = *dx.terms().begin();
  return Monomial{c, m.i};
}

bool is_univariate(const Derivation& d) { return d.dy.is_zero() && d.dx.degree_in(Var::Y) <= 0; }

std::vector<BiPoly> locus_gens(const Derivation& d) {
  std::vector<BiPoly> gens;
  for (const auto* g : {&d.dx, &d.dy})
    if (!g->is_zero()) gens.push_back(*g);
  return gens;
}

// x^v stripped from dx, made monic.
UniPoly strip_x_power(const UniPoly& p) {
  std::vector<Rational> c = p.coeffs();
  const auto first = std::find_if(c.begin(), c.end(), [](const Rational& v) { return !is_zero(v); });
  c.erase(c.begin(), first);
  return UniPoly(std::move(c)).monic();
}

bool shamsuddin_is(const Derivation& d, const ShamsuddinResult& r) {
  const auto shape = shamsuddin_shape(d);
  return shape && shamsuddin_analyze(shape->first, shape->second) == r;
}

// Q-irreducibility proven without factoring: degree one, or a cert of a
// complete search, which only accepts polynomials no smaller cert divides.
bool irreducible_in(const BiPoly& p, const DarbouxReport& report) {
  if (p.degree() == 1) return true;
  if (!report.complete_up_to_bound) return false;
  const BiPoly m = p.monic();
  return std::any_of(report.certs.begin(), report.certs.end(), [&](const DarbouxCert& c) { return c.p == m; });
}

bool proven_irreducible(const Derivation& d, const BiPoly& p) {
  if (p.degree() == 1) return true;
  if (p.degree() < 1) return false;
  return irreducible_in(p, darboux_search(d, static_cast<unsigned>(p.degree())));
}

Incidence incidence(const Derivation& d, const std::vector<BiPoly>& gens, Incidence::Source source,
                    const BiPoly& p, std::optional<Rational> t, const DarbouxReport& report) {
  Incidence inc;
  inc.source = source;
  inc.p = p;
  inc.t = std::move(t);
  inc.meets_locus = has_common_zero_with(gens, p);
  if (inc.meets_locus) {
    inc.divides_dx = divides(p, d.dx);
    inc.divides_dy = divides(p, d.dy);
  }
  inc.irreducible = irreducible_in(p, report);
  return inc;
}

bool recheck(const Derivation& d, const std::vector<BiPoly>& gens, const Incidence& inc) {
  if (inc.p.is_constant()) return false;
  if (inc.source == Incidence::Source::GenericMember) {
    const PencilCert bare{inc.p, inc.q, {}, {}};
    const bool all = std::holds_alternative<AllMembers>(pencil_members_through(bare, gens));
    return inc.meets_locus == all && inc.divides_dx == (all && d.dx.is_zero()) &&
           inc.divides_dy == (all && d.dy.is_zero()) && !inc.irreducible;
  }
  if (!is_darboux(d, inc.p)) return false;
  if (inc.meets_locus != has_common_zero_with(gens, inc.p)) return false;
  const bool dx_ok = inc.meets_locus && divides(inc.p, d.dx);
  const bool dy_ok = inc.meets_locus && divides(inc.p, d.dy);
  if (inc.divides_dx != dx_ok || inc.divides_dy != dy_ok) return false;
  return !inc.irreducible || proven_irreducible(d, inc.p);
}

}  // namespace

void check_ring(RingSpec spec, const Derivation& d) {
  if (spec != RingSpec::PolyBi && !is_univariate(d))
    throw ContractError("univariate ring takes dx in Q[x] only");
}

bool SingularLocusReport::verify(const Derivation& d) const {
  const auto gens = locus_gens(d);
  if (gens.empty() || locus_proper == is_unit_ideal(gens)) return false;
  return std::all_of(incidences.begin(), incidences.end(),
                     [&](const Incidence& inc) { return recheck(d, gens, inc); });
}

bool CommutativeCase::verify(const Derivation& d) const { return d.is_zero(); }

bool LocallyNilpotent::verify(const Derivation& d) const {
  const auto v = locally_nilpotent_bounded(d, std::max(k, 2U));
  const auto* n = std::get_if<Nilpotent>(&v);
  return n != nullptr && n->k == k;
}

bool LaurentMonomial::verify(const Derivation& d) const {
  const auto m = as_monomial(d.dx);
  return is_univariate(d) && m && m->alpha == alpha && m->n == n;
}

bool LaurentProperIdeal::verify(const Derivation& d) const {
  if (!is_univariate(d) || d.dx.is_zero() || as_monomial(d.dx)) return false;
  return generator.degree() >= 1 && generator == strip_x_power(d.dx.to_uni_x());
}

bool UniConstant::verify(const Derivation& d) const {
  return is_univariate(d) && !is_zero(alpha) && d.dx == BiPoly(alpha);
}

bool UniMonomialMusson::verify(const Derivation& d) const {
  const auto m = as_monomial(d.dx);
  return is_univariate(d) && n >= 1 && m && m->alpha == alpha && m->n == n;
}

bool ShamsuddinVerdict::verify(const Derivation& d) const { return shamsuddin_is(d, result); }

bool DeltaSimpleKdim2::verify(const Derivation& d) const { return shamsuddin_is(d, DSimple{}); }

bool PrimitivityBased::verify(const Derivation& d) const {
  return std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NotPrimitive>) {
          return v.pencil.verify(d);
        } else if constexpr (std::is_same_v<T, PrimitiveEvidence>) {
          return !d.is_zero() && !first_integral_search(d, v.bound).has_value();
        } else {
          return std::holds_alternative<UniqueDarboux>(v.reason) && shamsuddin_is(d, v.reason);
        }
      },
      verdict);
}

bool NoMaxDeltaIdealAndNotPrimitive::verify(const Derivation& d) const {
  const auto gens = locus_gens(d);
  return !gens.empty() && is_unit_ideal(gens) && pencil.verify(d);
}

bool SingularViolation::verify(const Derivation& d) const {
  const auto gens = locus_gens(d);
  if (gens.empty() || p.is_constant() || !is_darboux(d, p)) return false;
  if (!has_common_zero_with(gens, p)) return false;
  const BiPoly& g = fails == Generator::Dx ? d.dx : d.dy;
  return !divides(p, g) && proven_irreducible(d, p);
}

bool SingularLocusAudit::verify(const Derivation& d) const { return report.verify(d); }

bool verify(const Certificate& c, const Derivation& d) {
  return std::visit([&](const auto& v) { return v.verify(d); }, c);
}

std::string tag(const Certificate& c) {
  struct Tagger {
    std::string operator()(const CommutativeCase&) const { return "commutative-noetherian"; }
    std::string operator()(const LocallyNilpotent&) const { return "locally-nilpotent"; }
    std::string operator()(const LaurentMonomial&) const { return "laurent-monomial"; }
    std::string operator()(const LaurentProperIdeal&) const { return "laurent-proper-delta-ideal"; }
    std::string operator()(const UniConstant&) const { return "univariate-constant"; }
    std::string operator()(const UniMonomialMusson&) const { return "univariate-monomial"; }
    std::string operator()(const ShamsuddinVerdict&) const { return "shamsuddin"; }
    std::string operator()(const DeltaSimpleKdim2&) const { return "delta-simple-dim2"; }
    std::string operator()(const PrimitivityBased&) const { return "primitivity"; }
    std::string operator()(const NoMaxDeltaIdealAndNotPrimitive&) const { return "no-maximal-delta-ideal"; }
    std::string operator()(const SingularViolation&) const { return "singular-violation"; }
    std::string operator()(const SingularLocusAudit&) const { return "singular-locus-audit"; }
  };
  return std::visit(Tagger{}, c);
}

PrimitivityVerdict classify_primitivity(const Derivation& d, unsigned n) {
  if (d.is_zero()) throw ContractError("classify_primitivity: derivation is zero");
  if (const auto shape = shamsuddin_shape(d)) {
    auto r = shamsuddin_analyze(shape->first, shape->second);
    if (std::holds_alternative<UniqueDarboux>(r)) return PrimitiveCertified{std::move(r)};
  }
  if (auto pencil = first_integral_search(d, n)) return NotPrimitive{std::move(*pencil)};
  return PrimitiveEvidence{n};
}

SingularLocusReport singular_darboux_audit(const Derivation& d, const DarbouxReport& report) {
  const auto gens = locus_gens(d);
  if (gens.empty() || is_unit_ideal(gens))
    throw ContractError("singular_darboux_audit: dx and dy have no common zero");
  SingularLocusReport out;
  out.locus_proper = true;
  out.residual_nonrational = report.conjugate_families;
  using Source = Incidence::Source;
  for (const auto& c : report.certs)
    out.incidences.push_back(incidence(d, gens, Source::Cert, c.p, std::nullopt, report));
  if (report.pencils.empty()) return out;
  // Rational first integrals are all functions of one of least degree, the
  // first pencil found; every Darboux curve outside the certs is a component
  // of one of its members. Later pencils only add products.
  const auto& pencil = report.pencils.front();
  const auto through = pencil_members_through(pencil, gens);
  if (const auto* fin = std::get_if<FiniteMembers>(&through)) {
    for (const auto& m : fin->members)
      out.incidences.push_back(incidence(d, gens, Source::Member, m.member, m.t, report));
    if (fin->residual.degree() > 0) out.residual_nonrational = true;
  } else {
    // Every member meets the locus: audit p, q and the generic member.
    out.incidences.push_back(incidence(d, gens, Source::Member, pencil.p, Rational(0), report));
    out.incidences.push_back(incidence(d, gens, Source::Member, pencil.q, std::nullopt, report));
    Incidence generic;
    generic.source = Source::GenericMember;
    generic.p = pencil.p;
    generic.q = pencil.q;
    generic.meets_locus = true;
    generic.divides_dx = d.dx.is_zero();
    generic.divides_dy = d.dy.is_zero();
    out.incidences.push_back(std::move(generic));
  }
  return out;
}

bool delta_simple_dim1_check(RingSpec spec, const Derivation& d) {
  if (spec == RingSpec::PolyBi) throw ContractError("delta_simple_dim1_check: bivariate ring");
  check_ring(spec, d);
  if (spec == RingSpec::PolyUni) return d.dx.degree() == 0;
  return as_monomial(d.dx).has_value();
}

namespace {

Verdict certified(Status s, std::vector<Certificate> trace) {
  return Verdict{s, true, 0, std::move(trace)};
}

Verdict decide_univariate(RingSpec spec, const Derivation& d, unsigned darboux_bound) {
  if (d.dx.is_zero()) return certified(Status::Diamond, {CommutativeCase{}});
  const auto m = as_monomial(d.dx);
  if (spec == RingSpec::LaurentUni) {
    if (m) return certified(Status::Diamond, {LaurentMonomial{m->alpha, m->n}});
    return certified(Status::NotDiamond, {LaurentProperIdeal{strip_x_power(d.dx.to_uni_x())}});
  }
  if (m && m->n == 0) return certified(Status::Diamond, {UniConstant{m->alpha}});
  if (m) return certified(Status::NotDiamond, {UniMonomialMusson{m->alpha, m->n}});
  return Verdict{Status::Unknown, false, darboux_bound, {}};
}

}  // namespace

Verdict decide(RingSpec spec, const Derivation& d, unsigned darboux_bound, unsigned nilpotency_bound) {
  if (darboux_bound < 1 || nilpotency_bound < 1) throw ContractError("decide: bounds must be positive");
  check_ring(spec, d);
  if (spec != RingSpec::PolyBi) return decide_univariate(spec, d, darboux_bound);
  if (d.is_zero()) return certified(Status::Diamond, {CommutativeCase{}});

  if (nilpotency_bound >= 2) {
    const auto nil = locally_nilpotent_bounded(d, nilpotency_bound);
    if (const auto* n = std::get_if<Nilpotent>(&nil)) return certified(Status::Diamond, {LocallyNilpotent{n->k}});
  }

  if (const auto shape = shamsuddin_shape(d)) {
    auto r = shamsuddin_analyze(shape->first, shape->second);
    if (std::holds_alternative<DSimple>(r))
      return certified(Status::NotDiamond, {ShamsuddinVerdict{r}, DeltaSimpleKdim2{}});
    return certified(Status::NotDiamond,
                     {ShamsuddinVerdict{r}, PrimitivityBased{PrimitiveCertified{r}}});
  }

  const DarbouxReport report = darboux_search(d, darboux_bound);
  const auto gens = locus_gens(d);
  Verdict v;
  v.evidence_bound = darboux_bound;
  const PencilCert* pencil = report.pencils.empty() ? nullptr : &report.pencils.front();

  if (is_unit_ideal(gens)) {
    if (pencil != nullptr) {
      v.status = Status::Diamond;
      v.trace.emplace_back(NoMaxDeltaIdealAndNotPrimitive{*pencil});
    } else {
      v.status = Status::NotDiamond;
      v.trace.emplace_back(PrimitivityBased{PrimitiveEvidence{darboux_bound}});
    }
    return v;
  }

  if (pencil != nullptr) {
    v.trace.emplace_back(PrimitivityBased{NotPrimitive{*pencil}});
  } else {
    v.trace.emplace_back(PrimitivityBased{PrimitiveEvidence{darboux_bound}});
  }
  auto audit = singular_darboux_audit(d, report);
  const auto& incs = audit.incidences;
  const auto proven = std::find_if(incs.begin(), incs.end(), [](const Incidence& i) {
    return i.violates() && i.irreducible && i.source != Incidence::Source::GenericMember;
  });
  std::optional<SingularViolation> violation;
  if (proven != incs.end())
    violation = SingularViolation{proven->p, proven->divides_dx ? Generator::Dy : Generator::Dx};
  const bool any_violation = std::any_of(incs.begin(), incs.end(), [](const Incidence& i) { return i.violates(); });
  const bool residual = audit.residual_nonrational;
  v.trace.emplace_back(SingularLocusAudit{std::move(audit)});
  if (violation) {
    v.status = Status::NotDiamond;
    v.certified = true;
    v.trace.emplace_back(std::move(*violation));
  } else if (any_violation) {
    v.status = Status::NotDiamond;
  } else if (residual) {
    v.status = Status::Unknown;
  } else {
    v.status = pencil != nullptr ? Status::Diamond : Status::NotDiamond;
  }
  return v;
}

}  // namespace dop
