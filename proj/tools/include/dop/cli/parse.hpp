#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>

#include "dop/bipoly.hpp"
#include "dop/derivation.hpp"
#include "dop/diamond.hpp"
#include "dop/error.hpp"
#include "dop/laurent.hpp"
#include "dop/ore.hpp"
#include "dop/unipoly.hpp"

namespace dop::cli {

enum class RingKind { PolyUni, LaurentUni, PolyBi };

RingKind parse_ring_kind(std::string_view name);
std::string_view ring_name(RingKind kind);

/// Syntax or ring-membership error; `position` is a 0-based offset into the input.
class ParseError : public ContractError {
 public:
  ParseError(const std::string& what, std::size_t position);
  [[nodiscard]] std::size_t position() const { return position_; }
  [[nodiscard]] const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::size_t position_;
};

/// Exponents of x, y and t; negative only for x in Laurent input.
using RawMono = std::tuple<long, long, long>;
using RawPoly = std::map<RawMono, Rational>;

/// Parses the term grammar without ring checks.
RawPoly parse_raw(std::string_view text);

UniPoly parse_unipoly(std::string_view text);
LaurentUniPoly parse_laurent(std::string_view text);
BiPoly parse_bipoly(std::string_view text);

RingSpec to_spec(RingKind kind);

/// `dx=<poly>` for univariate rings, `dx=<poly>; dy=<poly>` for poly2. A
/// Laurent derivation needs dx in Q[x].
Derivation parse_derivation(std::string_view text, RingKind kind);

/// Skew polynomial in t with coefficients left of t: `x^2*t - 2*x`.
OrePoly parse_ore(std::string_view text, RingKind kind);

/// Grammar-valid text for a skew polynomial, highest power of t first.
std::string ore_text(const OrePoly& f);

}  // namespace dop::cli
