#include "dop/cli/app.hpp"

#include <functional>
#include <map>

#include "CLI11.hpp"
#include "dop/cli/json_out.hpp"
#include "dop/cli/parse.hpp"

namespace dop::cli {

namespace {

struct Options {
  std::string ring;
  std::string deriv;
  unsigned bound = 6;
  unsigned kmax = 50;
  std::string f;
  std::string g;
  std::string x;
  bool json = false;
};

struct Outcome {
  Json result;
  Json trace = Json::array();
  int code = 0;
};

RingKind ring_of(const Options& o) {
  if (!o.ring.empty()) return parse_ring_kind(o.ring);
  return o.deriv.find("dy") == std::string::npos ? RingKind::PolyUni : RingKind::PolyBi;
}

std::string deriv_text(const Derivation& d, RingKind kind) {
  return kind == RingKind::PolyBi ? d.to_string() : "dx=" + d.dx.to_string();
}

void require_ring(RingKind kind, std::initializer_list<RingKind> allowed, const std::string& verb) {
  for (auto k : allowed)
    if (k == kind) return;
  throw ContractError(verb + " does not support ring " + std::string(ring_name(kind)));
}

Json check(const std::string& what, bool ok) { return {{"check", what}, {"ok", ok}}; }

Outcome run_decide(const Options& o, RingKind kind, const Derivation& d) {
  const auto v = decide(to_spec(kind), d, o.bound, o.kmax);
  Outcome out;
  out.result = verdict_json(v);
  for (const auto& c : v.trace) out.trace.push_back(to_json(c));
  out.code = v.status == Status::Unknown ? 2 : 0;
  return out;
}

Outcome run_darboux(const Options& o, RingKind kind, const Derivation& d) {
  require_ring(kind, {RingKind::PolyBi}, "darboux");
  const auto rep = darboux_search(d, o.bound);
  Outcome out;
  out.result = to_json(rep);
  for (const auto& c : rep.certs) out.trace.push_back(check("d(" + c.p.to_string() + ") = cofactor * p", c.verify(d)));
  for (const auto& p : rep.pencils)
    out.trace.push_back(check("pencil " + p.p.to_string() + ", " + p.q.to_string(), p.verify(d)));
  out.code = rep.complete_up_to_bound ? 0 : 2;
  return out;
}

Outcome run_primitive(const Options& o, RingKind kind, const Derivation& d) {
  require_ring(kind, {RingKind::PolyBi}, "primitive");
  const auto v = classify_primitivity(d, o.bound);
  Outcome out;
  out.result = to_json(v);
  out.trace.push_back(to_json(Certificate{PrimitivityBased{v}}));
  return out;
}

Outcome run_first_integral(const Options& o, RingKind kind, const Derivation& d) {
  require_ring(kind, {RingKind::PolyBi}, "first-integral");
  const auto p = first_integral_search(d, o.bound);
  Outcome out;
  out.result = {{"found", p.has_value()}, {"degree_bound", o.bound}};
  if (p) {
    out.result["pencil"] = to_json(*p);
    out.trace.push_back(check("q d(p) - p d(q) = 0", p->verify(d)));
  }
  out.code = p ? 0 : 2;
  return out;
}

Outcome run_simple(const Options&, RingKind kind, const Derivation& d) {
  require_ring(kind, {RingKind::PolyUni, RingKind::LaurentUni}, "simple");
  Outcome out;
  out.result = {{"delta_simple", delta_simple_dim1_check(to_spec(kind), d)}};
  return out;
}

OrePoly operand(const std::string& text, const std::string& name, RingKind kind) {
  if (text.empty()) throw ContractError("--" + name + " required");
  return parse_ore(text, kind);
}

Outcome run_ore_mul(const Options& o, RingKind kind, const Derivation& d) {
  require_ring(kind, {RingKind::PolyUni, RingKind::PolyBi}, "ore-mul");
  const auto ctx = OreContext::make(d, kind == RingKind::PolyUni);
  const auto f = operand(o.f, "f", kind);
  const auto g = operand(o.g, "g", kind);
  const auto fg = mul(ctx, f, g);
  Outcome out;
  out.result = {{"product", ore_text(fg)}};
  out.trace.push_back(check("closed form equals stepwise product", fg == mul_stepwise(ctx, f, g)));
  return out;
}

Outcome run_witness(const Options& o, RingKind kind, const Derivation& d) {
  require_ring(kind, {RingKind::PolyUni, RingKind::PolyBi}, "witness");
  const auto ctx = OreContext::make(d, kind == RingKind::PolyUni);
  const auto f = operand(o.f, "f", kind);
  if (o.x.empty()) throw ContractError("--x required");
  const BiPoly x = parse_bipoly(o.x);
  const auto w = essential_witness(ctx, f, x);
  Outcome out;
  out.result = to_json(w);
  out.trace.push_back(check("x^(n+1) f = h t x + r x with r != 0", w.verify(ctx)));
  return out;
}

Json inputs_json(const Options& o, const std::string& verb, RingKind kind, const Derivation& d) {
  Json in{{"ring", std::string(ring_name(kind))}, {"deriv", deriv_text(d, kind)}};
  if (verb == "decide" || verb == "darboux" || verb == "primitive" || verb == "first-integral") in["bound"] = o.bound;
  if (verb == "decide") in["kmax"] = o.kmax;
  if (verb == "ore-mul" || verb == "witness") in["f"] = ore_text(parse_ore(o.f, kind));
  if (verb == "ore-mul") in["g"] = ore_text(parse_ore(o.g, kind));
  if (verb == "witness") in["x"] = parse_bipoly(o.x).to_string();
  return in;
}

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << pad << k << ":\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  }
}

int fail(const Options& o, const std::string& verb, const std::string& kind, const std::string& message,
         std::optional<std::size_t> position, std::ostream& out, std::ostream& err) {
  err << "error: " << message << "\n";
  if (o.json) {
    Json e{{"kind", kind}, {"message", message}};
    if (position) e["position"] = *position;
    out << Json{{"schema_version", kSchemaVersion}, {"verb", verb}, {"error", e}}.dump(2) << "\n";
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using Handler = std::function<Outcome(const Options&, RingKind, const Derivation&)>;
  const std::map<std::string, std::pair<std::string, Handler>> verbs{
      {"decide", {"Decide the essential-extension property of R[t; d]", run_decide}},
      {"darboux", {"List Darboux polynomials and pencils up to --bound", run_darboux}},
      {"primitive", {"Classify primitivity of R[t; d] for R = Q[x, y]", run_primitive}},
      {"simple", {"Decide d-simplicity of Q[x] or Q[x, x^-1]", run_simple}},
      {"ore-mul", {"Multiply --f by --g in R[t; d]", run_ore_mul}},
      {"witness", {"Essential-extension witness (h, r) for --f and --x", run_witness}},
      {"first-integral", {"Search a rational first integral up to --bound", run_first_integral}},
  };

  Options o;
  CLI::App app{"Skew polynomial rings R[t; d] and the essential-extension property", "dop"};
  app.require_subcommand(1);
  for (const auto& [name, entry] : verbs) {
    auto* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--ring", o.ring, "poly1, laurent or poly2 (default: poly2 when dy is given)")
        ->check(CLI::IsMember({"poly1", "laurent", "poly2"}));
    sub->add_option("--deriv", o.deriv, "\"dx=<poly>; dy=<poly>\"")->required();
    sub->add_flag("--json", o.json, "Emit a JSON document");
    if (name == "decide" || name == "darboux" || name == "primitive" || name == "first-integral")
      sub->add_option("--bound", o.bound, "Darboux degree bound")->capture_default_str()->check(CLI::PositiveNumber);
    if (name == "decide")
      sub->add_option("--kmax", o.kmax, "Nilpotency iteration bound")->capture_default_str()->check(CLI::PositiveNumber);
    if (name == "ore-mul" || name == "witness") sub->add_option("--f", o.f, "Skew polynomial, e.g. \"x^2*t - 2*x\"");
    if (name == "ore-mul") sub->add_option("--g", o.g, "Second factor");
    if (name == "witness") sub->add_option("--x", o.x, "Ring element x");
  }

  std::vector<std::string> argv_store{"dop"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return fail(o, "", "usage", e.what(), std::nullopt, out, err);
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    const RingKind kind = ring_of(o);
    const Derivation d = parse_derivation(o.deriv, kind);
    const Outcome res = verbs.at(verb).second(o, kind, d);
    const Json inputs = inputs_json(o, verb, kind, d);
    const Json doc{{"schema_version", kSchemaVersion},
                   {"verb", verb},
                   {"inputs", inputs},
                   {"result", res.result},
                   {"trace", res.trace}};
    if (o.json) {
      out << doc.dump(2) << "\n";
    } else {
      render_text(doc, out, 0);
    }
    return res.code;
  } catch (const ParseError& e) {
    return fail(o, verb, "parse", e.what(), e.position(), out, err);
  } catch (const LimitError& e) {
    return fail(o, verb, "limit", e.what(), std::nullopt, out, err);
  } catch (const ContractError& e) {
    return fail(o, verb, "contract", e.what(), std::nullopt, out, err);
  }
}

}  // namespace dop::cli
