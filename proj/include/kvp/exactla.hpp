#pragma once

#include <cstddef>
#include <vector>

#include "kvp/matrix.hpp"

namespace kvp {

/// Row rank by fraction-free (Bareiss) elimination over the integers. Each
/// row is first cleared of denominators; the pivot in every column is the
/// first nonzero entry at or below the current row.
std::size_t rank(const Matrix& m);

struct EchelonForm {
    Matrix reduced;                   ///< reduced row echelon form
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan reduction over the rationals.
EchelonForm reduced_row_echelon(const Matrix& m);

/// Basis of {x : m x = 0}. One vector per non-pivot column, in increasing
/// column order, with a 1 in that column and 0 in every other free column.
std::vector<Vector> nullspace_basis(const Matrix& m);

/// span(a) == span(b). All vectors must have the same length; throws
/// MalformedInput otherwise.
bool subspace_equal(const std::vector<Vector>& a, const std::vector<Vector>& b);

/// True when v lies in span(basis).
bool span_contains(const std::vector<Vector>& basis, const Vector& v);

/// Inverse of a square matrix; throws SingularMatrix.
Matrix inverse(const Matrix& m);

} // namespace kvp
