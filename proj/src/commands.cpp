#include "kvp/commands.hpp"

#include <algorithm>
#include <stdexcept>

#include "kvp/algebra_file.hpp"
#include "kvp/ce_cohomology.hpp"
#include "kvp/classify.hpp"
#include "kvp/errors.hpp"
#include "kvp/kv_cohomology.hpp"
#include "kvp/reproduction.hpp"

namespace kvp {

namespace {

RunReport input_error(RunReport report, const std::string& message) {
    report.diagnostics.push_back(message);
    report.exit_code = exit_input_error;
    return report;
}

nlohmann::ordered_json axiom_json(const AxiomSet& axioms) {
    auto a = nlohmann::ordered_json::array();
    for (auto x : axioms) a.push_back(std::string(axiom_name(x)));
    return a;
}

ComplexSection complex_section(const BilinearStructure& mu, const CohomologyOptions& options) {
    ComplexSection s;
    s.complex = options.complex;
    const bool ce = options.complex == "ce";
    s.max_q = options.max_q.value_or(ce ? mu.dim() : kv_max_degree);
    try {
        s.table = ce ? ce_complex_report(mu, s.max_q) : kv_complex_report(mu, s.max_q);
    } catch (const ComplexRefused& e) {
        s.refusal = e.what();
        s.refusal_witness = e.witness();
    }
    if (options.force_matrices)
        for (std::size_t q = 0; q <= s.max_q; ++q)
            s.matrices.emplace_back(q, ce ? ce_delta_matrix(mu, q) : kv_delta_matrix(mu, q));
    return s;
}

} // namespace

GridSpec parse_grid_spec(const std::string& text) {
    const auto parse_part = [&](const std::string& part) -> std::uint32_t {
        if (part.empty() || part.size() > 6 || part.find_first_not_of("0123456789") != std::string::npos)
            throw MalformedInput("grid must be BOUND or BOUND/DEN with small natural numbers, got '" + text + "'");
        return static_cast<std::uint32_t>(std::stoul(part));
    };
    GridSpec g;
    const auto slash = text.find('/');
    g.bound = parse_part(text.substr(0, slash));
    if (slash != std::string::npos) g.denominator = parse_part(text.substr(slash + 1));
    if (g.denominator == 0) throw MalformedInput("grid denominator must be positive");
    return g;
}

RunReport check_structure(const BilinearStructure& mu, const CheckOptions& options) {
    RunReport report;
    report.command = "check";
    report.input["structure"] = print_algebra(mu);
    report.input["axioms"] = axiom_json(options.axioms);
    AuditSection audit{options.axioms, axiom_audit(mu)};
    report.exit_code = audit.report.passes(options.axioms) ? exit_ok : exit_axiom_failure;
    report.audit = std::move(audit);
    return report;
}

RunReport cmd_check(const std::string& path, const CheckOptions& options) {
    try {
        RunReport report = check_structure(read_algebra_file(path), options);
        report.input["file"] = path;
        return report;
    } catch (const MalformedInput& e) {
        RunReport report;
        report.command = "check";
        report.input["file"] = path;
        return input_error(std::move(report), e.what());
    }
}

RunReport cohomology_of(const BilinearStructure& mu, const CohomologyOptions& options) {
    RunReport report;
    report.command = "cohomology";
    report.input["structure"] = print_algebra(mu);
    report.input["complex"] = options.complex;
    if (options.max_q) report.input["max_q"] = *options.max_q;
    report.input["force_matrices"] = options.force_matrices;
    if (options.complex != "ce" && options.complex != "kv")
        return input_error(std::move(report), "unknown complex '" + options.complex + "' (expected ce or kv)");
    try {
        report.complexes.push_back(complex_section(mu, options));
    } catch (const SizeGuardError& e) {
        return input_error(std::move(report), e.what());
    }
    if (report.complexes.back().refusal) report.exit_code = exit_axiom_failure;
    return report;
}

RunReport cmd_cohomology(const std::string& path, const CohomologyOptions& options) {
    try {
        RunReport report = cohomology_of(read_algebra_file(path), options);
        report.input["file"] = path;
        return report;
    } catch (const MalformedInput& e) {
        RunReport report;
        report.command = "cohomology";
        report.input["file"] = path;
        return input_error(std::move(report), e.what());
    }
}

RunReport cmd_classify(const ClassifyOptions& options) {
    RunReport report;
    report.command = "classify";
    report.input["dim"] = options.dim;
    report.input["axioms"] = axiom_json(options.axioms);
    if (options.grid)
        report.input["grid"] = std::to_string(options.grid->bound) + "/" + std::to_string(options.grid->denominator);
    try {
        if (options.dim == 0) throw MalformedInput("dim must be at least 1");
        ClassifySection c;
        c.dim = options.dim;
        c.axioms = options.axioms;
        c.system = constraint_system(options.dim, options.axioms);
        if (std::all_of(c.system.begin(), c.system.end(), [](const Polynomial& p) { return p.is_term(); }))
            c.slot_variety = solve_monomial_system(c.system, options.dim * options.dim * options.dim);
        if (options.dim == 2) c.variety = dim2_skew_solve(options.axioms);
        if (options.grid) {
            GridSection g;
            g.bound = options.grid->bound;
            g.denominator = options.grid->denominator;
            g.candidates = grid_candidate_count(options.dim, g.bound, g.denominator, options.axioms);
            g.survivors = grid_scan(options.dim, g.bound, g.denominator, options.axioms);
            c.grid = std::move(g);
        }
        report.classify = std::move(c);
    } catch (const SizeGuardError& e) {
        return input_error(std::move(report), e.what());
    } catch (const MalformedInput& e) {
        return input_error(std::move(report), e.what());
    }
    return report;
}

RunReport cmd_audit_family(const FamilyOptions& options) {
    const BilinearStructure mu = plane_skew_structure(options.x0, options.y0);
    RunReport report = check_structure(mu, CheckOptions{options.axioms});
    report.command = "audit-family";
    report.input["x0"] = options.x0.to_string();
    report.input["y0"] = options.y0.to_string();
    const AuditReport& audit = report.audit->report;
    if (audit.passes(Axiom::skew) && audit.passes(Axiom::jacobi))
        report.complexes.push_back(complex_section(mu, CohomologyOptions{"ce", 2, false}));
    return report;
}

RunReport cmd_reproduction_suite(std::uint64_t seed) {
    RunReport report;
    report.command = "paper-suite";
    report.input["seed"] = seed;
    report.suite = run_reproduction_suite(seed);
    for (const auto& r : report.suite)
        if (!r.passed) report.exit_code = exit_axiom_failure;
    return report;
}

} // namespace kvp
