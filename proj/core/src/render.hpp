#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dop/rational.hpp"

namespace dop::detail {

/// Joins (coefficient, monomial) pairs, already in display order, into the
/// canonical text form: `-x^2*y + 3/2*y - 1`. An empty monomial string
/// denotes the constant term.
std::string render_terms(const std::vector<std::pair<Rational, std::string>>& terms);

/// `x`, `x^3`, `x^-2`; empty for exponent 0.
std::string power_text(char var, long exponent);

}  // namespace dop::detail
