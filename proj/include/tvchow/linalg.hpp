#pragma once

#include <vector>

#include "tvchow/rational.hpp"

namespace tvchow {

/// Row-major rational matrix.
using Matrix = std::vector<Vector>;

/// Reduced row echelon form; zero rows dropped.
Matrix row_reduce(Matrix rows);

std::size_t rank(const Matrix& rows);

/// Basis of {x : rows * x = 0}, each basis vector primitive integral.
Matrix nullspace(const Matrix& rows, std::size_t columns);

/// Orthogonal projection of v onto the orthogonal complement of span(basis).
Vector project_out(const Vector& v, const Matrix& basis);

Matrix transpose(const Matrix& m, std::size_t columns);

}  // namespace tvchow
