#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "kvp/algebra.hpp"
#include "kvp/report.hpp"

namespace kvp {

struct CheckOptions {
    AxiomSet axioms{all_axioms.begin(), all_axioms.end()};
};

struct CohomologyOptions {
    std::string complex = "ce";
    std::optional<std::size_t> max_q;  ///< default: dim for ce, 3 for kv
    bool force_matrices = false;
};

struct GridSpec {
    std::uint32_t bound = 1;
    std::uint32_t denominator = 1;
};

/// Parses "B" or "B/D".
GridSpec parse_grid_spec(const std::string& text);

struct ClassifyOptions {
    std::size_t dim = 2;
    AxiomSet axioms{Axiom::kv_poisson};
    std::optional<GridSpec> grid;
};

struct FamilyOptions {
    Rational x0;
    Rational y0;
    AxiomSet axioms{Axiom::kv_poisson};
};

// Input and guard errors never escape: they are recorded as diagnostics with
// exit code 2.
RunReport cmd_check(const std::string& path, const CheckOptions& options);
RunReport cmd_cohomology(const std::string& path, const CohomologyOptions& options);
RunReport cmd_classify(const ClassifyOptions& options);
RunReport cmd_audit_family(const FamilyOptions& options);
RunReport cmd_reproduction_suite(std::uint64_t seed = 0x5eed2024);

/// In-memory variants used by the file commands.
RunReport check_structure(const BilinearStructure& mu, const CheckOptions& options);
RunReport cohomology_of(const BilinearStructure& mu, const CohomologyOptions& options);

} // namespace kvp
