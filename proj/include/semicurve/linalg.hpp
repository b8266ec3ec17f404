#pragma once

#include <optional>
#include <vector>

#include "semicurve/rational.hpp"

namespace semicurve {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& rows, std::size_t cols);

/// Basis of {x : A x = 0}.
Matrix nullspace(Matrix a, std::size_t cols);

/// Coefficients c with sum c_i vectors[i] = target, if any.
std::optional<Vector> solve_in_span(const Matrix& vectors, const Vector& target);

}  // namespace semicurve
