#pragma once

// KV complex of a Koszul-Vinberg algebra A with coefficients in A itself
// (left action mu(a, x), right action mu(x, a)).
//
// Cochains are unrestricted q-multilinear maps A^q -> A. For q >= 1,
//
//   delta^q f(a_1..a_{q+1}) = sum_{j=1}^{q} (-1)^j { (a_j . f)(a_1..^a_j..a_{q+1})
//                             + (e_q(a_j)(f . a_{q+1}))(a_1..^a_j..^a_{q+1}) }
//
// read with
//   (a . f)(x_1..x_q) = a f(x_1..x_q) - sum_s f(x_1, .., a x_s, .., x_q)
//   (f . a)(x_1..x_q) = f(x_1..x_q) a
//   e_rho(a) g         = g with a inserted at argument position rho.
//
// For q = 1 this is delta f(a, b) = -(a f(b) + f(a) b - f(ab)); for q = 2 it is
// the linearisation of the KV anomaly. Degree 0 uses
// delta^0 xi (a) = a xi - xi a on the subspace J(A) = {xi : (ab)xi = a(b xi)}
// of V; on J(A) delta^1 delta^0 = 0, which fails on V for non-associative KV
// algebras. The square-zero gate in kv_complex_report refuses to produce
// numbers whenever the composite of two consecutive differentials is nonzero.

#include <cstddef>
#include <vector>

#include "kvp/algebra.hpp"
#include "kvp/complex.hpp"
#include "kvp/matrix.hpp"

namespace kvp {

inline constexpr std::size_t kv_max_degree = 3;

/// n^q * n
std::size_t kv_cochain_dim(std::size_t n, std::size_t q);

/// Matrix of delta^q : C^q -> C^{q+1}. q = 0 gives delta^0 on all of V.
Matrix kv_delta_matrix(const BilinearStructure& mu, std::size_t q);

Cochain kv_apply_delta(const BilinearStructure& mu, const Cochain& f);

/// Basis of J(A) = {xi : Ass(a, b, xi) = 0 for all a, b}.
std::vector<Vector> kv_invariant_subspace(const BilinearStructure& mu);

/// Degrees 0..q_max (q_max <= kv_max_degree, else SizeGuardError). Throws
/// ComplexRefused (axiom kv) on non-KV input and SquareZeroViolation when
/// the gate fails.
ComplexReport kv_complex_report(const BilinearStructure& mu, std::size_t q_max = kv_max_degree);

/// delta^{q+1} delta^q == 0, restricted to J(A) when q = 0.
SquareZeroResult kv_square_zero_check(const BilinearStructure& mu, std::size_t q);

} // namespace kvp
