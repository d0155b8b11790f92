#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kvp/algebra.hpp"
#include "kvp/classify.hpp"
#include "kvp/complex.hpp"
#include "kvp/matrix.hpp"

namespace kvp {

inline constexpr int report_schema_version = 1;

enum ExitCode : int { exit_ok = 0, exit_axiom_failure = 1, exit_input_error = 2 };

struct AuditSection {
    AxiomSet requested;
    AuditReport report;
};

struct ComplexSection {
    std::string complex;  ///< "ce" or "kv"
    std::size_t max_q = 0;
    std::optional<ComplexReport> table;
    std::optional<std::string> refusal;
    std::optional<Witness> refusal_witness;
    std::vector<std::pair<std::size_t, Matrix>> matrices;  ///< (q, delta^q), on request
};

struct GridSection {
    std::uint32_t bound = 0;
    std::uint32_t denominator = 1;
    std::uint64_t candidates = 0;
    std::vector<BilinearStructure> survivors;
};

struct ClassifySection {
    std::size_t dim = 0;
    AxiomSet axioms;
    std::vector<Polynomial> system;
    /// Exact zero set over the slot variables when every generator is a monomial.
    std::optional<MonomialVariety> slot_variety;
    std::optional<VarietyReport> variety;
    std::optional<GridSection> grid;
};

struct SuiteResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
};

/// Everything one CLI run produces. The JSON and text renderings are both
/// derived from this object.
struct RunReport {
    std::string command;
    nlohmann::ordered_json input = nlohmann::ordered_json::object();
    std::optional<AuditSection> audit;
    std::vector<ComplexSection> complexes;
    std::optional<ClassifySection> classify;
    std::vector<SuiteResult> suite;
    std::vector<std::string> diagnostics;
    int exit_code = exit_ok;
};

nlohmann::ordered_json to_json(const RunReport& report);
std::string render_text(const RunReport& report);

} // namespace kvp
