#pragma once

// Chevalley-Eilenberg complex of a bracket acting on its own underlying space.
//
// C^0 = V and C^q = Hom(Lambda^q V, V). With 1-based argument positions,
//
//   (delta f)(a_1..a_{q+1}) = sum_i (-1)^{i+1} rho(a_i) f(.. a_i omitted ..)
//                           + sum_{i<j} (-1)^{i+j} f(mu(a_i, a_j), .. a_i, a_j omitted ..)
//
// so delta^0 xi (a) = rho(a) xi and
// delta^1 f (a, b) = rho(a) f(b) - rho(b) f(a) - f(mu(a, b)). The action rho
// defaults to the adjoint action rho(a) xi = mu(a, xi). A 0-based argument
// convention flips the sign of every delta^q, which changes no rank.

#include <cstddef>
#include <vector>

#include "kvp/algebra.hpp"
#include "kvp/complex.hpp"
#include "kvp/matrix.hpp"

namespace kvp {

/// binom(n, q) * n; C^0 = V.
std::size_t ce_cochain_dim(std::size_t n, std::size_t q);

/// Matrix of delta^q : C^q -> C^{q+1} in the canonical bases. For q > n the
/// result is 0 x 0; for q = n it has n columns and no rows.
Matrix ce_delta_matrix(const BilinearStructure& mu, std::size_t q);

/// Same, with rho(e_i) e_j = sum_k action(i, j, k) e_k.
Matrix ce_delta_matrix(const BilinearStructure& mu, const BilinearStructure& action, std::size_t q);

/// delta applied to a single cochain.
Cochain ce_apply_delta(const BilinearStructure& mu, const Cochain& f);

/// Dimensions, ranks, kernels and Betti numbers for degrees 0..q_max.
/// Throws ComplexRefused (axiom jacobi) when the Jacobiator does not vanish
/// on all basis triples.
ComplexReport ce_complex_report(const BilinearStructure& mu, std::size_t q_max);

/// Basis of Ker delta^q decoded into alternating cochains.
std::vector<Cochain> ce_cocycle_basis(const BilinearStructure& mu, std::size_t q);

/// delta^{q+1} delta^q == 0 check with a failing basis cochain as witness.
SquareZeroResult ce_square_zero_check(const BilinearStructure& mu, std::size_t q);

} // namespace kvp
