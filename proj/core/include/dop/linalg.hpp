#pragma once

#include <optional>
#include <vector>

#include "dop/rational.hpp"

namespace dop {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;

/// Reduced row echelon form in place; returns the pivot column of each
/// nonzero row, in order.
std::vector<std::size_t> rref(Matrix& m);

/// Basis of the right null space, one vector per free column, each with a 1
/// in its free column. `cols` is needed when m has no rows.
std::vector<Vector> kernel(Matrix m, std::size_t cols);

/// Some x with m x = b, or nullopt.
std::optional<Vector> solve(Matrix m, const Vector& b);

std::size_t rank(Matrix m);

}  // namespace dop
