#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kvp/commands.hpp"
#include "kvp/errors.hpp"

namespace {

kvp::AxiomSet axioms_or_default(const std::string& text, kvp::AxiomSet fallback) {
    return text.empty() ? fallback : kvp::parse_axiom_list(text);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact audits, cohomology tables and classification for bilinear structures over Q"};
    app.require_subcommand(0, 1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    bool paper_suite = false;
    app.add_flag("--paper-suite", paper_suite, "Run the reproduction battery and print a summary");

    std::string check_file, check_axioms;
    auto* check = app.add_subcommand("check", "Audit the axioms of a structure file");
    check->add_option("file", check_file, "Algebra file")->required();
    check->add_option("--axioms", check_axioms, "Comma-separated axioms that decide the exit code (default: all)");

    std::string coh_file;
    kvp::CohomologyOptions coh;
    std::size_t max_q = 0;
    auto* cohomology = app.add_subcommand("cohomology", "Per-degree table of the ce or kv complex");
    cohomology->add_option("file", coh_file, "Algebra file")->required();
    cohomology->add_option("--complex", coh.complex, "ce or kv")->check(CLI::IsMember({"ce", "kv"}));
    auto* max_q_opt = cohomology->add_option("--max-q", max_q, "Highest degree (default: dim for ce, 3 for kv)");
    cohomology->add_flag("--force-matrices", coh.force_matrices, "Emit the differential matrices as well");

    kvp::ClassifyOptions cls;
    std::string cls_axioms, cls_grid;
    auto* classify = app.add_subcommand("classify", "Constraint system, exact variety and grid scan");
    classify->add_option("--dim", cls.dim, "Dimension (1..3)");
    classify->add_option("--axioms", cls_axioms, "Comma-separated axioms (default: kv-poisson)");
    classify->add_option("--grid", cls_grid, "Grid scan BOUND or BOUND/DEN");

    std::string x0 = "0", y0 = "0", fam_axioms;
    auto* family = app.add_subcommand("audit-family", "Audit mu(e1,e2) = x0 e1 + y0 e2 on the plane");
    family->add_option("--x0", x0, "Rational x0");
    family->add_option("--y0", y0, "Rational y0");
    family->add_option("--axioms", fam_axioms, "Axioms that decide the exit code (default: kv-poisson)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kvp::exit_input_error;
    }

    kvp::RunReport report;
    try {
        if (paper_suite) {
            report = kvp::cmd_reproduction_suite();
        } else if (*check) {
            report = kvp::cmd_check(check_file, {axioms_or_default(check_axioms, kvp::CheckOptions{}.axioms)});
        } else if (*cohomology) {
            if (*max_q_opt) coh.max_q = max_q;
            report = kvp::cmd_cohomology(coh_file, coh);
        } else if (*classify) {
            cls.axioms = axioms_or_default(cls_axioms, cls.axioms);
            if (!cls_grid.empty()) cls.grid = kvp::parse_grid_spec(cls_grid);
            report = kvp::cmd_classify(cls);
        } else if (*family) {
            report = kvp::cmd_audit_family({kvp::Rational::parse(x0), kvp::Rational::parse(y0),
                                            axioms_or_default(fam_axioms, {kvp::Axiom::kv_poisson})});
        } else {
            std::cerr << app.help();
            return kvp::exit_input_error;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kvp::exit_input_error;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kvp::exit_input_error;
    }

    if (format == "json")
        std::cout << kvp::to_json(report).dump(2) << "\n";
    else
        std::cout << kvp::render_text(report);
    for (const auto& d : report.diagnostics)
        if (report.exit_code == kvp::exit_input_error) std::cerr << "error: " << d << "\n";
    return report.exit_code;
}
