#include "dop/laurent.hpp"

#include <algorithm>

#include "render.hpp"

namespace dop {

LaurentUniPoly::LaurentUniPoly(long offset, const UniPoly& body) : offset_(offset), body_(body) {
  normalize();
}

LaurentUniPoly LaurentUniPoly::monomial(const Rational& c, long exponent) {
  return {exponent, UniPoly(c)};
}

void LaurentUniPoly::normalize() {
  if (body_.is_zero()) {
    offset_ = 0;
    return;
  }
  const auto& c = body_.coeffs();
  std::size_t low = 0;
  while (dop::is_zero(c[low])) ++low;
  if (low == 0) return;
  body_ = UniPoly(std::vector<Rational>(c.begin() + static_cast<long>(low), c.end()));
  offset_ += static_cast<long>(low);
}

Rational LaurentUniPoly::coeff(long exponent) const {
  return body_.coeff(static_cast<int>(exponent - offset_));
}

std::optional<UniPoly> LaurentUniPoly::as_polynomial() const {
  if (is_zero()) return UniPoly{};
  if (offset_ < 0) return std::nullopt;
  return UniPoly::monomial(Rational(1), static_cast<int>(offset_)) * body_;
}

std::optional<std::pair<Rational, long>> LaurentUniPoly::as_monomial() const {
  if (body_.degree() != 0) return std::nullopt;
  return std::pair{body_.coeff(0), offset_};
}

LaurentUniPoly LaurentUniPoly::derivative() const {
  if (is_zero()) return {};
  const auto& c = body_.coeffs();
  std::vector<Rational> d(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) d[k] = c[k] * (offset_ + static_cast<long>(k));
  return {offset_ - 1, UniPoly(std::move(d))};
}

namespace {

// Both operands re-expressed over a common lowest exponent.
std::pair<UniPoly, UniPoly> align(long oa, const UniPoly& a, long ob, const UniPoly& b,
                                  long& low) {
  low = std::min(oa, ob);
  return {UniPoly::monomial(Rational(1), static_cast<int>(oa - low)) * a,
          UniPoly::monomial(Rational(1), static_cast<int>(ob - low)) * b};
}

}  // namespace

LaurentUniPoly& LaurentUniPoly::operator+=(const LaurentUniPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long low = 0;
  auto [a, b] = align(offset_, body_, o.offset_, o.body_, low);
  offset_ = low;
  body_ = a + b;
  normalize();
  return *this;
}

LaurentUniPoly& LaurentUniPoly::operator-=(const LaurentUniPoly& o) {
  LaurentUniPoly neg(o.offset_, -o.body_);
  return *this += neg;
}

LaurentUniPoly operator*(const LaurentUniPoly& a, const LaurentUniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.offset_ + b.offset_, a.body_ * b.body_};
}

std::string LaurentUniPoly::to_string() const {
  std::vector<std::pair<Rational, std::string>> terms;
  const auto& c = body_.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (dop::is_zero(c[k])) continue;
    terms.emplace_back(c[k], detail::power_text('x', offset_ + static_cast<long>(k)));
  }
  return detail::render_terms(terms);
}

}  // namespace dop
