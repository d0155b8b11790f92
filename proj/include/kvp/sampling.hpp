#pragma once

// Seeded random generators for structures, rationals and basis changes.

#include <cstddef>
#include <random>

#include "kvp/algebra.hpp"
#include "kvp/matrix.hpp"

namespace kvp {

/// p/q with q in 1..max_den and |p/q| <= bound.
Rational random_rational(std::mt19937_64& rng, long bound, long max_den);

BilinearStructure random_structure(std::mt19937_64& rng, std::size_t dim, long bound, long max_den);
/// Draws the constants with i < j and mirrors them; diagonal products are zero.
BilinearStructure random_skew_structure(std::mt19937_64& rng, std::size_t dim, long bound, long max_den);

/// Invertible n x n matrix with small integer entries (redrawn until det != 0).
Matrix random_invertible_matrix(std::mt19937_64& rng, std::size_t n, long bound = 3);

} // namespace kvp
