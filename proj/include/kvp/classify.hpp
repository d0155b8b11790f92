#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kvp/algebra.hpp"
#include "kvp/polynomial.hpp"

namespace kvp {

inline constexpr std::size_t classify_max_dim = 3;
inline constexpr std::uint64_t grid_scan_max_candidates = 10'000'000;
inline constexpr std::uint64_t default_pencil_seed = 0x5eed2024;

/// Variable index of the structure-constant slot (i, j, k), 0-based.
inline std::size_t slot_variable(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    return (i * n + j) * n + k;
}
/// `v[i][j][k]` with 1-based indices.
std::string slot_variable_name(std::size_t n, std::size_t index);
/// `x0` for variable 0, `y0` for variable 1 of the plane family.
std::string plane_variable_name(std::size_t index);

/// One polynomial per (identity, basis tuple, output coordinate) in the
/// structure constants, normalized to leading coefficient 1, zero and
/// repeated polynomials dropped. kv-poisson expands to skew + nilpotent.
/// Throws SizeGuardError for dim > 3.
std::vector<Polynomial> constraint_system(std::size_t dim, const AxiomSet& axioms);

/// Substitutes the plane skew family (v[1][2][k] = x0, y0; v[2][1][k] the
/// negatives; everything else 0) into a polynomial over dim-2 slots.
Polynomial reduce_to_plane_family(const Polynomial& p);

/// Union of coordinate subspaces {x_i = 0 for i in zero_vars}: the zero set
/// of a system whose generators are all monomials times units.
struct MonomialVariety {
    struct Component {
        std::vector<std::size_t> zero_vars;
        friend bool operator==(const Component&, const Component&) = default;
    };

    std::size_t variable_count = 0;
    std::vector<Component> components;  ///< irredundant, sorted; empty = empty set

    bool contains(std::span<const Rational> point) const;
    std::string describe(const VariableNamer& name) const;
    friend bool operator==(const MonomialVariety&, const MonomialVariety&) = default;
};

/// Exact case analysis; throws std::logic_error if a generator is not a
/// single term.
MonomialVariety solve_monomial_system(const std::vector<Polynomial>& generators, std::size_t variable_count);

/// Whether p is a Q-linear combination of the generators.
bool polynomial_span_contains(const std::vector<Polynomial>& generators, const Polynomial& p);

/// The set F = (Q x {0}) u ({0} x Q) asserted for the plane family.
MonomialVariety claimed_plane_solution_set();

struct Discrepancy {
    std::string claim;
    std::string computed;
    std::vector<Rational> witness_point;
    std::string witness_note;
};

struct SampledClaim {
    std::vector<Rational> point;
    AuditReport audit;
};

struct VarietyReport {
    AxiomSet axioms;
    std::vector<Polynomial> system;          ///< over v[i][j][k]
    std::vector<Polynomial> reduced_system;  ///< over (x0, y0)
    MonomialVariety variety;
    /// When jacobi is requested: the variety with the per-term condition
    /// mu(e_k, mu(e_i, e_j)) = 0 in place of the cyclic identity.
    std::optional<MonomialVariety> per_term_jacobi;
    std::vector<SampledClaim> sampled_claims;
    std::vector<Discrepancy> flags;
};

/// Solves the requested axioms on the plane skew family exactly.
VarietyReport dim2_skew_solve(const AxiomSet& axioms);

/// All structures with every free constant in {-bound, ..., bound} in steps
/// of 1/denominator that pass the axioms. Requesting skew (or kv-poisson)
/// restricts the enumeration to skew structures. With dedup, structures that
/// differ by a nonzero scalar are merged into the representative whose first
/// nonzero constant is 1. Output is sorted lexicographically by constants.
/// Throws SizeGuardError when dim > 3 or the candidate count exceeds 10^7.
std::vector<BilinearStructure> grid_scan(std::size_t dim, std::uint32_t bound, std::uint32_t denominator,
                                         const AxiomSet& axioms, bool dedup = true);

/// Number of grid candidates grid_scan would enumerate (saturates at
/// UINT64_MAX).
std::uint64_t grid_candidate_count(std::size_t dim, std::uint32_t bound, std::uint32_t denominator,
                                   const AxiomSet& axioms);

/// mu scaled so that its first nonzero constant is 1.
BilinearStructure normalize_scaling(const BilinearStructure& mu);

/// lambda with b = lambda a, if any.
std::optional<Rational> scaling_factor(const BilinearStructure& a, const BilinearStructure& b);

AuditReport family_audit(const Rational& x0, const Rational& y0);

struct PencilCounterexample {
    std::size_t first = 0;
    std::size_t second = 0;
    Rational lambda;
    Axiom axiom = Axiom::skew;
    Witness witness;
};

struct PencilReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<PencilCounterexample> counterexamples;  ///< first few failures
    bool closed() const { return failures == 0; }
};

/// Audits `samples` random combinations mu_i + lambda mu_j against the axioms.
PencilReport pencil_closure_check(const std::vector<BilinearStructure>& structures, const AxiomSet& axioms,
                                  std::size_t samples, std::uint64_t seed = default_pencil_seed);

} // namespace kvp
