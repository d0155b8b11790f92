#include "kvp/report.hpp"

#include <fmt/format.h>

#include "kvp/algebra_file.hpp"

namespace kvp {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.to_string());
    return a;
}

json to_json(const Witness& w) {
    return json{{"indices", w.indices}, {"residual", to_json(w.residual)}};
}

json axiom_list(const AxiomSet& axioms) {
    json a = json::array();
    for (auto x : axioms) a.push_back(std::string(axiom_name(x)));
    return a;
}

json to_json(const AuditSection& s) {
    json verdicts = json::object();
    for (auto a : all_axioms) {
        const Verdict& v = s.report[a];
        json entry{{"pass", v.pass}};
        if (v.witness) entry["witness"] = to_json(*v.witness);
        verdicts[std::string(axiom_name(a))] = std::move(entry);
    }
    return json{{"requested", axiom_list(s.requested)},
                {"all_requested_pass", s.report.passes(s.requested)},
                {"verdicts", std::move(verdicts)}};
}

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (const auto& x : m.row(r)) row.push_back(x.to_string());
        rows.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

json to_json(const ComplexSection& s) {
    json out{{"complex", s.complex}, {"max_q", s.max_q}};
    if (s.table) {
        out["status"] = "ok";
        json rows = json::array();
        for (const auto& r : s.table->rows)
            rows.push_back(json{{"q", r.degree},
                                {"dim", r.cochain_dim},
                                {"rank", r.rank},
                                {"kernel", r.kernel},
                                {"betti", r.betti}});
        out["table"] = std::move(rows);
    } else {
        out["status"] = "refused";
    }
    if (s.refusal) out["refusal"] = *s.refusal;
    if (s.refusal_witness) out["refusal_witness"] = to_json(*s.refusal_witness);
    if (!s.matrices.empty()) {
        json ms = json::array();
        for (const auto& [q, m] : s.matrices) {
            json entry = to_json(m);
            entry["q"] = q;
            ms.push_back(std::move(entry));
        }
        out["matrices"] = std::move(ms);
    }
    return out;
}

json polynomials(const std::vector<Polynomial>& ps, const VariableNamer& name) {
    json a = json::array();
    for (const auto& p : ps) a.push_back(p.to_string(name));
    return a;
}

json to_json(const VarietyReport& v) {
    json out{{"reduced_system", polynomials(v.reduced_system, plane_variable_name)},
             {"variety", v.variety.describe(plane_variable_name)}};
    if (v.per_term_jacobi) out["per_term_jacobi_variety"] = v.per_term_jacobi->describe(plane_variable_name);
    json samples = json::array();
    for (const auto& s : v.sampled_claims) {
        json verdicts = json::object();
        for (auto a : all_axioms) verdicts[std::string(axiom_name(a))] = s.audit.passes(a);
        samples.push_back(json{{"point", to_json(s.point)}, {"verdicts", std::move(verdicts)}});
    }
    out["sampled_claims"] = std::move(samples);
    json flags = json::array();
    for (const auto& f : v.flags)
        flags.push_back(json{{"claim", f.claim},
                             {"computed", f.computed},
                             {"witness_point", to_json(f.witness_point)},
                             {"witness_note", f.witness_note}});
    out["flags"] = std::move(flags);
    return out;
}

std::string slot_variety_text(const MonomialVariety& v, const VariableNamer& name) {
    const bool zero_only = v.components.size() == 1 && v.components[0].zero_vars.size() == v.variable_count;
    return zero_only ? "zero structure only" : v.describe(name);
}

json to_json(const ClassifySection& c) {
    const auto name = [n = c.dim](std::size_t i) { return slot_variable_name(n, i); };
    json out{{"dim", c.dim}, {"axioms", axiom_list(c.axioms)}, {"system", polynomials(c.system, name)}};
    if (c.slot_variety) out["solution_set"] = slot_variety_text(*c.slot_variety, name);
    if (c.variety) out["plane_family"] = to_json(*c.variety);
    if (c.grid) {
        json survivors = json::array();
        for (const auto& mu : c.grid->survivors) survivors.push_back(print_algebra(mu));
        out["grid"] = json{{"bound", c.grid->bound},
                           {"denominator", c.grid->denominator},
                           {"candidates", c.grid->candidates},
                           {"survivor_count", c.grid->survivors.size()},
                           {"survivors", std::move(survivors)}};
    }
    return out;
}

std::string vector_text(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string();
    return s + ")";
}

std::string witness_text(const Witness& w) {
    std::string s = "e(";
    for (std::size_t i = 0; i < w.indices.size(); ++i) s += (i ? "," : "") + std::to_string(w.indices[i]);
    return s + ") -> " + vector_text(w.residual);
}

void indent_block(std::string& out, const std::string& block, const std::string& prefix) {
    std::size_t start = 0;
    while (start < block.size()) {
        const auto nl = block.find('\n', start);
        out += prefix + block.substr(start, nl - start) + "\n";
        if (nl == std::string::npos) break;
        start = nl + 1;
    }
}

} // namespace

nlohmann::ordered_json to_json(const RunReport& report) {
    json out{{"schema_version", report_schema_version}, {"command", report.command}, {"input", report.input}};
    if (report.audit) out["audit"] = to_json(*report.audit);
    if (!report.complexes.empty()) {
        json cs = json::array();
        for (const auto& c : report.complexes) cs.push_back(to_json(c));
        out["complexes"] = std::move(cs);
    }
    if (report.classify) out["classify"] = to_json(*report.classify);
    if (!report.suite.empty()) {
        json s = json::array();
        for (const auto& r : report.suite)
            s.push_back(json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        out["suite"] = std::move(s);
    }
    out["diagnostics"] = report.diagnostics;
    out["exit_code"] = report.exit_code;
    return out;
}

std::string render_text(const RunReport& report) {
    std::string out = fmt::format("kvpoisson {} (schema {})\n", report.command, report_schema_version);
    if (report.input.contains("structure")) {
        out += "input structure:\n";
        indent_block(out, report.input["structure"].get<std::string>(), "  ");
    }

    if (report.audit) {
        const auto& a = *report.audit;
        out += fmt::format("\naxiom audit (requested: {})\n", to_string(a.requested));
        for (auto ax : all_axioms) {
            const Verdict& v = a.report[ax];
            out += fmt::format("  {:<13} {}", axiom_name(ax), v.pass ? "pass" : "FAIL");
            if (v.witness) out += "  witness " + witness_text(*v.witness);
            out += "\n";
        }
    }

    for (const auto& c : report.complexes) {
        out += fmt::format("\n{} complex, degrees 0..{}\n", c.complex, c.max_q);
        if (c.table) {
            out += fmt::format("  {:>3} {:>8} {:>8} {:>8} {:>8}\n", "q", "dim C^q", "rank", "kernel", "betti");
            for (const auto& r : c.table->rows)
                out += fmt::format("  {:>3} {:>8} {:>8} {:>8} {:>8}\n", r.degree, r.cochain_dim, r.rank, r.kernel,
                                   r.betti);
        }
        if (c.refusal) out += "  refused: " + *c.refusal + "\n";
        if (c.refusal_witness) out += "  witness " + witness_text(*c.refusal_witness) + "\n";
        for (const auto& [q, m] : c.matrices)
            out += fmt::format("  delta^{} ({}x{}): {}\n", q, m.rows(), m.cols(), to_string(m));
    }

    if (report.classify) {
        const auto& c = *report.classify;
        const auto name = [n = c.dim](std::size_t i) { return slot_variable_name(n, i); };
        out += fmt::format("\nconstraint system, dim {}, axioms {} ({} polynomials)\n", c.dim, to_string(c.axioms),
                           c.system.size());
        for (const auto& p : c.system) out += "  " + p.to_string(name) + " = 0\n";
        if (c.slot_variety) out += "  solution set: " + slot_variety_text(*c.slot_variety, name) + "\n";
        if (c.variety) {
            const auto& v = *c.variety;
            out += "\nplane skew family mu(e1,e2) = x0 e1 + y0 e2\n  reduced system:";
            if (v.reduced_system.empty()) out += " (none)";
            for (const auto& p : v.reduced_system) out += "  " + p.to_string(plane_variable_name) + " = 0;";
            out += "\n  variety: " + v.variety.describe(plane_variable_name) + "\n";
            if (v.per_term_jacobi)
                out += "  variety with per-term jacobi reading: " + v.per_term_jacobi->describe(plane_variable_name) +
                       "\n";
            out += "  sampled family members:\n";
            for (const auto& s : v.sampled_claims) {
                out += "    " + vector_text(s.point) + ":";
                for (auto ax : all_axioms)
                    out += fmt::format(" {}={}", axiom_name(ax), s.audit.passes(ax) ? "pass" : "FAIL");
                out += "\n";
            }
            for (const auto& f : v.flags)
                out += fmt::format("  FLAG: claim \"{}\" vs computed \"{}\"; witness {} ({})\n", f.claim, f.computed,
                                   vector_text(f.witness_point), f.witness_note);
        }
        if (c.grid) {
            const auto& g = *c.grid;
            out += fmt::format("\ngrid scan, bound {}, denominator {}: {} candidates, {} survivors\n", g.bound,
                               g.denominator, g.candidates, g.survivors.size());
            for (const auto& mu : g.survivors) {
                out += "  --\n";
                indent_block(out, print_algebra(mu), "  ");
            }
        }
    }

    if (!report.suite.empty()) {
        out += "\nreproduction suite\n";
        for (const auto& r : report.suite)
            out += fmt::format("  [{}] {} {}: {}\n", r.passed ? "PASS" : "FAIL", r.id, r.title, r.detail);
    }

    for (const auto& d : report.diagnostics) out += "diagnostic: " + d + "\n";
    out += fmt::format("exit code {}\n", report.exit_code);
    return out;
}

} // namespace kvp
