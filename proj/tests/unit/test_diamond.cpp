#include <gtest/gtest.h>

#include "dop/diamond.hpp"
#include "dop/error.hpp"
#include "fixtures.hpp"

namespace dop {
namespace {

using test::P;

Derivation D(std::string_view dx, std::string_view dy = "0") { return {P(dx), P(dy)}; }

void expect_trace_verifies(const Verdict& v, const Derivation& d) {
  for (const auto& c : v.trace) EXPECT_TRUE(verify(c, d)) << tag(c);
}

template <class T>
const T* find_step(const Verdict& v) {
  for (const auto& c : v.trace)
    if (const auto* s = std::get_if<T>(&c)) return s;
  return nullptr;
}

TEST(Decide, LaurentMonomial) {
  const auto d = D("x^3");
  const auto v = decide(RingSpec::LaurentUni, d);
  EXPECT_EQ(v.status, Status::Diamond);
  EXPECT_TRUE(v.certified);
  ASSERT_EQ(v.trace.size(), 1U);
  const auto* m = std::get_if<LaurentMonomial>(&v.trace[0]);
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->n, 3U);
  expect_trace_verifies(v, d);
}

TEST(Decide, LaurentNotMonomial) {
  const auto d = D("x^2 + x");
  const auto v = decide(RingSpec::LaurentUni, d);
  EXPECT_EQ(v.status, Status::NotDiamond);
  EXPECT_TRUE(v.certified);
  const auto* s = find_step<LaurentProperIdeal>(v);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->generator, test::U("x + 1"));
  expect_trace_verifies(v, d);
}

TEST(Decide, Univariate) {
  auto v = decide(RingSpec::PolyUni, D("5"));
  EXPECT_EQ(v.status, Status::Diamond);
  EXPECT_TRUE(v.certified);
  expect_trace_verifies(v, D("5"));
  v = decide(RingSpec::PolyUni, D("x^2"));
  EXPECT_EQ(v.status, Status::NotDiamond);
  EXPECT_TRUE(v.certified);
  ASSERT_NE(find_step<UniMonomialMusson>(v), nullptr);
  EXPECT_EQ(find_step<UniMonomialMusson>(v)->n, 2U);
  v = decide(RingSpec::PolyUni, D("0"));
  EXPECT_EQ(v.status, Status::Diamond);
  v = decide(RingSpec::PolyUni, D("x^2 + 1"));
  EXPECT_EQ(v.status, Status::Unknown);
  EXPECT_FALSE(v.certified);
  EXPECT_EQ(v.evidence_bound, 6U);
}

TEST(Decide, LocallyNilpotent) {
  const auto d = D("1", "x");
  const auto v = decide(RingSpec::PolyBi, d);
  EXPECT_EQ(v.status, Status::Diamond);
  EXPECT_TRUE(v.certified);
  ASSERT_EQ(v.trace.size(), 1U);
  const auto* n = std::get_if<LocallyNilpotent>(&v.trace[0]);
  ASSERT_NE(n, nullptr);
  EXPECT_EQ(n->k, 3U);
  expect_trace_verifies(v, d);
}

TEST(Decide, EulerSingularViolation) {
  const auto d = D("x", "y");
  const auto v = decide(RingSpec::PolyBi, d);
  EXPECT_EQ(v.status, Status::NotDiamond);
  EXPECT_TRUE(v.certified);
  ASSERT_FALSE(v.trace.empty());
  const auto* s = std::get_if<SingularViolation>(&v.trace.back());
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->p, P("x"));
  EXPECT_EQ(s->fails, Generator::Dy);
  expect_trace_verifies(v, d);
}

TEST(Decide, Shamsuddin) {
  for (const auto* dy : {"y", "x*y + 1"}) {
    const auto d = D("1", dy);
    const auto v = decide(RingSpec::PolyBi, d);
    EXPECT_EQ(v.status, Status::NotDiamond) << dy;
    EXPECT_TRUE(v.certified);
    ASSERT_NE(find_step<ShamsuddinVerdict>(v), nullptr);
    expect_trace_verifies(v, d);
  }
  const auto v = decide(RingSpec::PolyBi, D("1", "x*y + 1"));
  EXPECT_TRUE(std::holds_alternative<DSimple>(find_step<ShamsuddinVerdict>(v)->result));
  EXPECT_NE(find_step<DeltaSimpleKdim2>(v), nullptr);
  const auto u = decide(RingSpec::PolyBi, D("1", "y"));
  EXPECT_EQ(std::get<UniqueDarboux>(find_step<ShamsuddinVerdict>(u)->result).c, UniPoly{});
}

TEST(Decide, UnitIdealPencil) {
  const auto d = D("1", "x*y^2");
  const auto v = decide(RingSpec::PolyBi, d);
  EXPECT_EQ(v.status, Status::Diamond);
  EXPECT_FALSE(v.certified);
  EXPECT_GE(v.evidence_bound, 3U);
  const auto* s = find_step<NoMaxDeltaIdealAndNotPrimitive>(v);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(s->pencil.p, P("y"));
  EXPECT_EQ(s->pencil.q, P("x^2*y + 2"));
  EXPECT_EQ(s->pencil.cofactor, P("x*y"));
  expect_trace_verifies(v, d);
}

TEST(Decide, FinalExampleAudit) {
  const BiPoly g = P("x*y^2 + y^2 - y");
  const Derivation d{g, -(g * P("y^2"))};
  const auto v = decide(RingSpec::PolyBi, d);
  EXPECT_EQ(v.status, Status::Diamond);
  EXPECT_FALSE(v.certified);
  const auto* prim = find_step<PrimitivityBased>(v);
  ASSERT_NE(prim, nullptr);
  const auto& pencil = std::get<NotPrimitive>(prim->verdict).pencil;
  EXPECT_EQ(pencil.p, P("y"));
  EXPECT_EQ(pencil.q, P("x*y - 1"));
  EXPECT_EQ(pencil.cofactor, P("-y") * g);
  const auto* audit = find_step<SingularLocusAudit>(v);
  ASSERT_NE(audit, nullptr);
  EXPECT_TRUE(audit->report.locus_proper);
  EXPECT_FALSE(audit->report.residual_nonrational);
  std::vector<std::pair<std::optional<Rational>, BiPoly>> members;
  for (const auto& inc : audit->report.incidences) {
    EXPECT_FALSE(inc.violates()) << inc.p.to_string();
    if (inc.source == Incidence::Source::Member) members.emplace_back(inc.t, inc.p);
  }
  const std::vector<std::pair<std::optional<Rational>, BiPoly>> want{{Rational(0), P("y")},
                                                                     {Rational(1), P("x*y + y - 1")}};
  EXPECT_EQ(members, want);
  expect_trace_verifies(v, d);
}

TEST(Decide, Errors) {
  EXPECT_THROW(decide(RingSpec::PolyUni, D("x", "y")), ContractError);
  EXPECT_THROW(decide(RingSpec::LaurentUni, D("y")), ContractError);
  EXPECT_THROW(decide(RingSpec::PolyBi, D("x", "y"), 0, 50), ContractError);
}

TEST(Decide, ZeroDerivation) {
  const auto v = decide(RingSpec::PolyBi, D("0", "0"));
  EXPECT_EQ(v.status, Status::Diamond);
  EXPECT_TRUE(v.certified);
  EXPECT_TRUE(std::holds_alternative<CommutativeCase>(v.trace.at(0)));
}

// A certified verdict leans on bounded primitivity evidence only when a
// singular violation settles it anyway.
TEST(Decide, CertifiedNeedsBoundFreeSteps) {
  const std::vector<Derivation> ds{D("x", "y"), D("1", "x"), D("1", "y"), D("1", "x*y^2"), D("y", "-x"),
                                   D("x^2", "y"), D("x*y", "y^2 + 1")};
  for (const auto& d : ds) {
    const auto v = decide(RingSpec::PolyBi, d, 4, 20);
    if (!v.certified || std::holds_alternative<SingularViolation>(v.trace.back())) continue;
    for (const auto& c : v.trace) {
      const auto* prim = std::get_if<PrimitivityBased>(&c);
      EXPECT_FALSE(prim != nullptr && std::holds_alternative<PrimitiveEvidence>(prim->verdict)) << d.to_string();
    }
  }
}

TEST(Decide, ScalingInvariance) {
  const std::vector<Derivation> ds{D("x", "y"), D("1", "x"), D("1", "y"), D("1", "x*y^2"), D("y", "-x"),
                                   D("x^2", "y"), D("x", "2*y")};
  for (const auto& d : ds) {
    const auto base = decide(RingSpec::PolyBi, d, 4, 20);
    for (const Rational a : {Rational(-1), make_rational(3, 2), Rational(7)}) {
      const auto v = decide(RingSpec::PolyBi, d.scaled(a), 4, 20);
      EXPECT_EQ(v.status, base.status) << d.to_string() << " scaled by " << a.get_str();
    }
  }
  for (const auto* dx : {"x^3", "x^2 + x", "3", "0"})
    for (const Rational a : {Rational(-2), make_rational(1, 3)})
      EXPECT_EQ(decide(RingSpec::LaurentUni, D(dx).scaled(a)).status, decide(RingSpec::LaurentUni, D(dx)).status);
}

TEST(Decide, Deterministic) {
  const auto d = D("x", "y");
  const auto a = decide(RingSpec::PolyBi, d);
  const auto b = decide(RingSpec::PolyBi, d);
  EXPECT_EQ(a.status, b.status);
  EXPECT_EQ(a.certified, b.certified);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) EXPECT_EQ(tag(a.trace[i]), tag(b.trace[i]));
}

TEST(Decide, MonotoneInBound) {
  const std::vector<Derivation> ds{D("x", "y"), D("1", "x*y^2"), D("y", "-x"), D("x", "2*y")};
  for (const auto& d : ds) {
    const auto lo = decide(RingSpec::PolyBi, d, 2, 20);
    const auto hi = decide(RingSpec::PolyBi, d, 4, 20);
    if (lo.certified) {
      EXPECT_TRUE(hi.certified) << d.to_string();
      EXPECT_EQ(lo.status, hi.status) << d.to_string();
    }
  }
}

TEST(ClassifyPrimitivity, Examples) {
  const auto e = classify_primitivity(D("x", "y"), 1);
  ASSERT_TRUE(std::holds_alternative<NotPrimitive>(e));
  EXPECT_EQ(std::get<NotPrimitive>(e).pencil.p, P("x"));
  EXPECT_EQ(std::get<NotPrimitive>(e).pencil.q, P("y"));
  EXPECT_EQ(std::get<NotPrimitive>(e).pencil.cofactor, P("1"));
  const auto s = classify_primitivity(D("1", "y"), 4);
  ASSERT_TRUE(std::holds_alternative<PrimitiveCertified>(s));
  EXPECT_EQ(std::get<UniqueDarboux>(std::get<PrimitiveCertified>(s).reason).c, UniPoly{});
  const auto q = classify_primitivity(D("1", "x*y^2"), 3);
  ASSERT_TRUE(std::holds_alternative<NotPrimitive>(q));
  EXPECT_EQ(std::get<NotPrimitive>(q).pencil.q, P("x^2*y + 2"));
  const auto r = classify_primitivity(D("1", "x*y + 1"), 3);
  ASSERT_TRUE(std::holds_alternative<PrimitiveEvidence>(r));
  EXPECT_EQ(std::get<PrimitiveEvidence>(r).bound, 3U);
  EXPECT_THROW(classify_primitivity(D("0", "0"), 3), ContractError);
}

TEST(SingularAudit, Euler) {
  const auto d = D("x", "y");
  const auto rep = singular_darboux_audit(d, darboux_search(d, 1));
  EXPECT_TRUE(rep.locus_proper);
  bool found = false;
  for (const auto& inc : rep.incidences) {
    if (inc.p != P("x") || inc.source != Incidence::Source::Member) continue;
    found = true;
    EXPECT_TRUE(inc.meets_locus);
    EXPECT_TRUE(inc.divides_dx);
    EXPECT_FALSE(inc.divides_dy);
    EXPECT_TRUE(inc.violates());
    EXPECT_TRUE(inc.irreducible);
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(rep.verify(d));
}

TEST(SingularAudit, UnitIdealIsAnError) {
  const auto d = D("1", "x*y^2");
  EXPECT_THROW(singular_darboux_audit(d, darboux_search(d, 3)), ContractError);
}

TEST(SingularAudit, TamperedReportFails) {
  const auto d = D("x", "y");
  auto rep = singular_darboux_audit(d, darboux_search(d, 1));
  ASSERT_FALSE(rep.incidences.empty());
  rep.incidences.front().divides_dy = !rep.incidences.front().divides_dy;
  EXPECT_FALSE(rep.verify(d));
}

TEST(DeltaSimpleDim1, Examples) {
  EXPECT_TRUE(delta_simple_dim1_check(RingSpec::LaurentUni, D("x^3")));
  EXPECT_FALSE(delta_simple_dim1_check(RingSpec::LaurentUni, D("x^2 + x")));
  EXPECT_TRUE(delta_simple_dim1_check(RingSpec::LaurentUni, D("-2")));
  EXPECT_FALSE(delta_simple_dim1_check(RingSpec::LaurentUni, D("0")));
  EXPECT_TRUE(delta_simple_dim1_check(RingSpec::PolyUni, D("5")));
  EXPECT_FALSE(delta_simple_dim1_check(RingSpec::PolyUni, D("x")));
  EXPECT_FALSE(delta_simple_dim1_check(RingSpec::PolyUni, D("0")));
  EXPECT_THROW(delta_simple_dim1_check(RingSpec::PolyBi, D("1", "0")), ContractError);
}

TEST(Certificates, RejectWrongDerivation) {
  const auto d = D("1", "x");
  const auto other = D("1", "y");
  const auto v = decide(RingSpec::PolyBi, d);
  for (const auto& c : v.trace) EXPECT_FALSE(verify(c, other)) << tag(c);
  EXPECT_FALSE(verify(LaurentMonomial{Rational(1), 2}, D("x^3")));
  EXPECT_FALSE(verify(SingularViolation{P("y"), Generator::Dy}, D("x", "y")));
  EXPECT_TRUE(verify(SingularViolation{P("y"), Generator::Dx}, D("x", "y")));
}

}  // namespace
}  // namespace dop
