#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "kvp/algebra.hpp"
#include "kvp/matrix.hpp"

namespace kvp {

enum class CochainKind { alternating, unrestricted };

/// Coefficient table of a q-multilinear map V^q -> V in the canonical basis
/// of its cochain space: input tuples in lexicographic order (strictly
/// increasing tuples for alternating maps), output index innermost.
struct Cochain {
    std::size_t dim_v = 0;
    std::size_t degree = 0;
    CochainKind kind = CochainKind::unrestricted;
    Vector coefficients;

    /// f(e_{args[0]}, ..., e_{args[q-1]}) for 0-based basis indices in any
    /// order; alternating cochains apply the permutation sign.
    Vector value(std::span<const std::size_t> args) const;
};

struct DegreeRow {
    std::size_t degree = 0;
    std::size_t cochain_dim = 0;
    std::size_t rank = 0;    ///< rank of the differential leaving this degree
    std::size_t kernel = 0;  ///< cocycle dimension
    long betti = 0;          ///< kernel - rank of the incoming differential
};

struct ComplexReport {
    std::string complex;  ///< "ce" or "kv"
    std::vector<DegreeRow> rows;

    std::vector<long> betti() const;
};

/// A complex report was requested for a structure that does not satisfy the
/// complex's precondition (Jacobi for CE, KV for the KV complex).
class ComplexRefused : public std::runtime_error {
public:
    ComplexRefused(std::string complex, Axiom axiom, Witness witness);

    const std::string& complex() const { return complex_; }
    Axiom axiom() const { return axiom_; }
    const Witness& witness() const { return witness_; }

private:
    std::string complex_;
    Axiom axiom_;
    Witness witness_;
};

/// delta^{q+1} delta^q != 0 on an input the gate accepted.
class SquareZeroViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct SquareZeroResult {
    bool holds = true;
    std::optional<Cochain> witness;  ///< basis cochain whose image under delta^2 is nonzero
};

/// Index of the first column c with (next * current) e_c != 0.
std::optional<std::size_t> first_nonzero_composite_column(const Matrix& next, const Matrix& current);

} // namespace kvp
