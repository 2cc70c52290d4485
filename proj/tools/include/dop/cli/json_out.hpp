#pragma once

#include "dop/darboux.hpp"
#include "dop/diamond.hpp"
#include "dop/ore.hpp"
#include "json.hpp"

namespace dop::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1.0.0";

/// Rationals render as canonical text ("-3/2"); polynomials as grammar-valid text.
Json to_json(const Rational& r);
Json to_json(const DarbouxCert& c);
Json to_json(const PencilCert& p);
Json to_json(const DarbouxReport& r);
Json to_json(const ShamsuddinResult& r);
Json to_json(const PrimitivityVerdict& v);
Json to_json(const Incidence& i);
Json to_json(const SingularLocusReport& r);
/// {"tag": ..., data fields}
Json to_json(const Certificate& c);
/// {"status", "certified", "evidence_bound"}
Json verdict_json(const Verdict& v);
Json to_json(const WitnessCert& w);

}  // namespace dop::cli
