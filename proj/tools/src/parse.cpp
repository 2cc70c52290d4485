#include "dop/cli/parse.hpp"

#include <cctype>

namespace dop::cli {

ParseError::ParseError(const std::string& what, std::size_t position)
    : ContractError(what + " at position " + std::to_string(position)), message_(what), position_(position) {}

RingKind parse_ring_kind(std::string_view name) {
  if (name == "poly1") return RingKind::PolyUni;
  if (name == "laurent") return RingKind::LaurentUni;
  if (name == "poly2") return RingKind::PolyBi;
  throw ContractError("unknown ring '" + std::string(name) + "' (poly1, laurent, poly2)");
}

std::string_view ring_name(RingKind kind) {
  switch (kind) {
    case RingKind::PolyUni: return "poly1";
    case RingKind::LaurentUni: return "laurent";
    case RingKind::PolyBi: return "poly2";
  }
  return "?";
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawPoly poly() {
    RawPoly out;
    skip();
    if (at_end()) fail("empty polynomial");
    bool negate = false;
    for (;;) {
      auto [mono, c] = term(negate);
      auto [it, inserted] = out.try_emplace(mono, c);
      if (!inserted) it->second += c;
      if (dop::is_zero(it->second)) out.erase(it);
      skip();
      if (at_end()) break;
      const char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negate = op == '-';
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<RawMono, Rational> term(bool negate) {
    skip();
    Rational c(1);
    RawMono mono{0, 0, 0};
    bool sign = false;
    if (peek() == '-') {
      sign = true;
      ++pos_;
      skip();
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = coeff();
    } else {
      monomial(mono);
    }
    skip();
    while (peek() == '*') {
      ++pos_;
      monomial(mono);
      skip();
    }
    if (sign != negate) c = -c;
    return {mono, c};
  }

  Rational coeff() {
    const Integer num = digits();
    Integer den = 1;
    skip();
    if (peek() == '/') {
      ++pos_;
      skip();
      const std::size_t at = pos_;
      den = digits();
      if (den == 0) fail("zero denominator", at);
    }
    return make_rational(num, den);
  }

  void monomial(RawMono& mono) {
    skip();
    const std::size_t at = pos_;
    const char v = peek();
    if (v != 'x' && v != 'y' && v != 't') fail("expected a variable x, y or t or a coefficient");
    ++pos_;
    long e = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
        skip();
      }
      const Integer d = digits();
      if (!d.fits_slong_p() || d > 100000) fail("exponent too large", at);
      e = neg ? -d.get_si() : d.get_si();
    }
    (v == 'x' ? std::get<0>(mono) : v == 'y' ? std::get<1>(mono) : std::get<2>(mono)) += e;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, at);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what, 0);
}

}  // namespace

RawPoly parse_raw(std::string_view text) { return Parser(text).poly(); }

UniPoly parse_unipoly(std::string_view text) {
  UniPoly p;
  for (const auto& [m, c] : parse_raw(text)) {
    const auto [i, j, k] = m;
    require(j == 0 && k == 0, "only x may appear in a univariate polynomial");
    require(i >= 0, "negative exponent in polynomial ring");
    p += UniPoly::monomial(c, static_cast<int>(i));
  }
  return p;
}

LaurentUniPoly parse_laurent(std::string_view text) {
  LaurentUniPoly p;
  for (const auto& [m, c] : parse_raw(text)) {
    const auto [i, j, k] = m;
    require(j == 0 && k == 0, "only x may appear in a Laurent polynomial");
    p += LaurentUniPoly::monomial(c, i);
  }
  return p;
}

BiPoly parse_bipoly(std::string_view text) {
  BiPoly p;
  for (const auto& [m, c] : parse_raw(text)) {
    const auto [i, j, k] = m;
    require(k == 0, "t may only appear in skew polynomials");
    require(i >= 0 && j >= 0, "negative exponent in polynomial ring");
    p += BiPoly::term(c, Mono{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  }
  return p;
}

RingSpec to_spec(RingKind kind) {
  switch (kind) {
    case RingKind::PolyUni: return RingSpec::PolyUni;
    case RingKind::LaurentUni: return RingSpec::LaurentUni;
    case RingKind::PolyBi: return RingSpec::PolyBi;
  }
  return RingSpec::PolyBi;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// The text after `name=` in one `;`-separated component, with its offset.
std::pair<std::string_view, std::size_t> component(std::string_view part, std::size_t offset,
                                                   std::string_view name) {
  const auto eq = part.find('=');
  if (eq == std::string_view::npos || trim(part.substr(0, eq)) != name)
    throw ParseError("expected " + std::string(name) + "=<poly>", offset);
  return {part.substr(eq + 1), offset + eq + 1};
}

template <class F>
auto at_offset(std::size_t offset, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(e.message(), offset + e.position());
  }
}

}  // namespace

Derivation parse_derivation(std::string_view text, RingKind kind) {
  const auto semi = text.find(';');
  const std::string_view first = text.substr(0, semi);
  const auto [dx_text, dx_at] = component(first, 0, "dx");
  if (kind != RingKind::PolyBi) {
    if (semi != std::string_view::npos && !trim(text.substr(semi + 1)).empty())
      throw ParseError("univariate derivation takes dx only", semi);
    if (kind == RingKind::PolyUni)
      return {BiPoly::from_uni(at_offset(dx_at, [&] { return parse_unipoly(dx_text); })), {}};
    const auto l = at_offset(dx_at, [&] { return parse_laurent(dx_text); });
    const auto p = l.as_polynomial();
    if (!p) throw ParseError("Laurent derivation needs dx in Q[x]", dx_at);
    return {BiPoly::from_uni(*p), {}};
  }
  if (semi == std::string_view::npos) throw ParseError("dy required", text.size());
  const auto [dy_text, dy_at] = component(text.substr(semi + 1), semi + 1, "dy");
  if (dy_text.find(';') != std::string_view::npos) throw ParseError("unexpected ';'", dy_at + dy_text.find(';'));
  return {at_offset(dx_at, [&] { return parse_bipoly(dx_text); }),
          at_offset(dy_at, [&] { return parse_bipoly(dy_text); })};
}

OrePoly parse_ore(std::string_view text, RingKind kind) {
  if (kind == RingKind::LaurentUni) throw ParseError("skew polynomials over the Laurent ring are not supported", 0);
  std::vector<BiPoly> coeffs;
  for (const auto& [m, c] : parse_raw(text)) {
    const auto [i, j, k] = m;
    require(i >= 0 && j >= 0 && k >= 0, "negative exponent in polynomial ring");
    require(kind == RingKind::PolyBi || j == 0, "only x and t may appear in a univariate skew polynomial");
    if (coeffs.size() <= static_cast<std::size_t>(k)) coeffs.resize(static_cast<std::size_t>(k) + 1);
    coeffs[static_cast<std::size_t>(k)] +=
        BiPoly::term(c, Mono{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  }
  return OrePoly(std::move(coeffs));
}

std::string ore_text(const OrePoly& f) {
  std::string out;
  for (int i = f.degree(); i >= 0; --i) {
    const BiPoly a = f.coeff(i);
    for (const auto& [m, c] : a.terms()) {
      const bool negative = sgn(c) < 0;
      out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
      std::string body = BiPoly::term(abs(c), m).to_string();
      if (i > 0) {
        const std::string t = i == 1 ? "t" : "t^" + std::to_string(i);
        body = body == "1" ? t : body + "*" + t;
      }
      out += body;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace dop::cli
