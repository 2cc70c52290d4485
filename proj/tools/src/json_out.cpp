#include "dop/cli/json_out.hpp"

#include "dop/cli/parse.hpp"

namespace dop::cli {

namespace {

Json poly_list(const std::vector<BiPoly>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

const char* source_name(Incidence::Source s) {
  switch (s) {
    case Incidence::Source::Cert: return "cert";
    case Incidence::Source::Member: return "member";
    case Incidence::Source::GenericMember: return "generic-member";
  }
  return "";
}

}  // namespace

Json to_json(const Rational& r) { return r.get_str(); }

Json to_json(const DarbouxCert& c) { return {{"p", c.p.to_string()}, {"cofactor", c.cofactor.to_string()}}; }

Json to_json(const PencilCert& p) {
  return {{"p", p.p.to_string()},
          {"q", p.q.to_string()},
          {"cofactor", p.cofactor.to_string()},
          {"family", poly_list(p.family)}};
}

Json to_json(const DarbouxReport& r) {
  Json certs = Json::array();
  for (const auto& c : r.certs) certs.push_back(to_json(c));
  Json pencils = Json::array();
  for (const auto& p : r.pencils) pencils.push_back(to_json(p));
  return {{"certs", certs},
          {"pencils", pencils},
          {"degree_bound", r.degree_bound},
          {"complete_up_to_bound", r.complete_up_to_bound},
          {"common_factor", r.common_factor.to_string()},
          {"unresolved_factor", r.unresolved_factor.to_string()},
          {"conjugate_families", r.conjugate_families}};
}

Json to_json(const ShamsuddinResult& r) {
  if (const auto* u = std::get_if<UniqueDarboux>(&r))
    return {{"kind", "UniqueDarboux"}, {"c", BiPoly::from_uni(u->c).to_string()}};
  return {{"kind", "DSimple"}};
}

Json to_json(const PrimitivityVerdict& v) {
  if (const auto* n = std::get_if<NotPrimitive>(&v)) return {{"kind", "NotPrimitive"}, {"pencil", to_json(n->pencil)}};
  if (const auto* e = std::get_if<PrimitiveEvidence>(&v)) return {{"kind", "PrimitiveEvidence"}, {"bound", e->bound}};
  return {{"kind", "PrimitiveCertified"}, {"reason", to_json(std::get<PrimitiveCertified>(v).reason)}};
}

Json to_json(const Incidence& i) {
  Json j{{"source", source_name(i.source)}, {"p", i.p.to_string()}};
  if (i.source == Incidence::Source::GenericMember) {
    j["q"] = i.q.to_string();
    j["t"] = "generic";
  } else if (i.source == Incidence::Source::Member) {
    j["t"] = i.t ? to_json(*i.t) : Json("infinity");
  }
  j["meets_locus"] = i.meets_locus;
  j["divides_dx"] = i.divides_dx;
  j["divides_dy"] = i.divides_dy;
  j["irreducible"] = i.irreducible;
  j["violation"] = i.violates();
  return j;
}

Json to_json(const SingularLocusReport& r) {
  Json incs = Json::array();
  for (const auto& i : r.incidences) incs.push_back(to_json(i));
  return {{"locus_proper", r.locus_proper}, {"incidences", incs}, {"residual_nonrational", r.residual_nonrational}};
}

Json to_json(const Certificate& c) {
  Json j{{"tag", tag(c)}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, LocallyNilpotent>) {
          j["k"] = v.k;
        } else if constexpr (std::is_same_v<T, LaurentMonomial> || std::is_same_v<T, UniMonomialMusson>) {
          j["alpha"] = to_json(v.alpha);
          j["n"] = v.n;
        } else if constexpr (std::is_same_v<T, LaurentProperIdeal>) {
          j["generator"] = BiPoly::from_uni(v.generator).to_string();
        } else if constexpr (std::is_same_v<T, UniConstant>) {
          j["alpha"] = to_json(v.alpha);
        } else if constexpr (std::is_same_v<T, ShamsuddinVerdict>) {
          j["result"] = to_json(v.result);
        } else if constexpr (std::is_same_v<T, PrimitivityBased>) {
          j["verdict"] = to_json(v.verdict);
        } else if constexpr (std::is_same_v<T, NoMaxDeltaIdealAndNotPrimitive>) {
          j["pencil"] = to_json(v.pencil);
        } else if constexpr (std::is_same_v<T, SingularViolation>) {
          j["p"] = v.p.to_string();
          j["fails"] = v.fails == Generator::Dx ? "dx" : "dy";
        } else if constexpr (std::is_same_v<T, SingularLocusAudit>) {
          j["report"] = to_json(v.report);
        }
      },
      c);
  return j;
}

Json verdict_json(const Verdict& v) {
  return {{"status", to_string(v.status)}, {"certified", v.certified}, {"evidence_bound", v.evidence_bound}};
}

Json to_json(const WitnessCert& w) {
  return {{"f", ore_text(w.f)}, {"x", w.x_elt.to_string()}, {"h", ore_text(w.h)}, {"r", w.r.to_string()}};
}

}  // namespace dop::cli
