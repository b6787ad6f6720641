#pragma once

#include <optional>
#include <vector>

#include "combinorm/rat.hpp"

namespace combinorm {

/// Exact rank over the rationals (fraction-free elimination).
std::size_t rank(const RatMatrix& m);

/// Exact determinant. Throws InvalidArgument for non-square input.
Rat determinant(const RatMatrix& m);

/// Unique solution of the square system m·x = rhs, or nullopt when m is
/// singular.
std::optional<DensePoint> solve(const RatMatrix& m, const DensePoint& rhs);

/// Integer rows obtained by clearing denominators row by row. Row scaling
/// preserves rank and the sign pattern of every row.
std::vector<std::vector<mpz_class>> integer_rows(const RatMatrix& m);

}  // namespace combinorm
