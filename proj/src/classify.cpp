#include "kvp/classify.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <map>
#include <stdexcept>

#include "kvp/exactla.hpp"

namespace kvp {

namespace {

AxiomSet expand(const AxiomSet& axioms) {
    AxiomSet out = axioms;
    if (out.erase(Axiom::kv_poisson)) {
        out.insert(Axiom::skew);
        out.insert(Axiom::nilpotent);
    }
    return out;
}

struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const { return polynomial_less(a, b); }
};

struct ConstantsLess {
    bool operator()(const BilinearStructure& a, const BilinearStructure& b) const {
        return std::lexicographical_compare(a.constants().begin(), a.constants().end(), b.constants().begin(),
                                            b.constants().end());
    }
};

void append_unique(std::vector<Polynomial>& out, std::set<Polynomial, PolyLess>& seen, const Polynomial& p) {
    if (p.is_zero()) return;
    Polynomial m = p.monic();
    if (seen.insert(m).second) out.push_back(std::move(m));
}

std::vector<Polynomial> reduce_all(const std::vector<Polynomial>& system) {
    std::vector<Polynomial> out;
    std::set<Polynomial, PolyLess> seen;
    for (const auto& p : system) append_unique(out, seen, reduce_to_plane_family(p));
    return out;
}

bool is_skew_scan(const AxiomSet& axioms) {
    const AxiomSet e = expand(axioms);
    return e.count(Axiom::skew) > 0;
}

/// Free slots of the enumeration: (i<j, k) for skew scans, all slots otherwise.
std::vector<std::size_t> free_slots(std::size_t n, bool skew) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = skew ? i + 1 : 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out.push_back(slot_variable(n, i, j, k));
    return out;
}

std::vector<Rational> point(long x, long y) { return {Rational(x), Rational(y)}; }

std::string point_text(const std::vector<Rational>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].to_string();
    return s + ")";
}

} // namespace

std::string slot_variable_name(std::size_t n, std::size_t index) {
    const std::size_t k = index % n;
    const std::size_t j = (index / n) % n;
    const std::size_t i = index / (n * n);
    return "v[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "][" + std::to_string(k + 1) + "]";
}

std::string plane_variable_name(std::size_t index) {
    if (index == 0) return "x0";
    if (index == 1) return "y0";
    return "t" + std::to_string(index);
}

std::vector<Polynomial> constraint_system(std::size_t dim, const AxiomSet& axioms) {
    if (dim > classify_max_dim)
        throw SizeGuardError("constraint systems are limited to dim <= " + std::to_string(classify_max_dim) +
                             ", requested " + std::to_string(dim));
    SymbolicStructure mu(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) mu(i, j, k) = Polynomial::variable(slot_variable(dim, i, j, k));

    std::vector<Polynomial> out;
    std::set<Polynomial, PolyLess> seen;
    for (Axiom a : expand(axioms))
        for (const auto& t : basis_tuples(dim, axiom_arity(a)))
            for (const auto& p : axiom_residual(mu, a, t)) append_unique(out, seen, p);
    return out;
}

Polynomial reduce_to_plane_family(const Polynomial& p) {
    std::vector<Polynomial> images(8);
    const Polynomial x = Polynomial::variable(0);
    const Polynomial y = Polynomial::variable(1);
    images[slot_variable(2, 0, 1, 0)] = x;
    images[slot_variable(2, 0, 1, 1)] = y;
    images[slot_variable(2, 1, 0, 0)] = -x;
    images[slot_variable(2, 1, 0, 1)] = -y;
    return p.substitute(images);
}

bool MonomialVariety::contains(std::span<const Rational> point) const {
    return std::any_of(components.begin(), components.end(), [&](const Component& c) {
        return std::all_of(c.zero_vars.begin(), c.zero_vars.end(),
                           [&](std::size_t v) { return point[v].is_zero(); });
    });
}

std::string MonomialVariety::describe(const VariableNamer& name) const {
    if (components.empty()) return "empty set";
    std::string s;
    for (const auto& c : components) {
        if (!s.empty()) s += " u ";
        if (c.zero_vars.empty()) {
            s += "whole space";
            continue;
        }
        s += "{";
        for (std::size_t i = 0; i < c.zero_vars.size(); ++i)
            s += (i ? ", " : "") + (name ? name(c.zero_vars[i]) : "v" + std::to_string(c.zero_vars[i])) + " = 0";
        s += "}";
    }
    return s;
}

MonomialVariety solve_monomial_system(const std::vector<Polynomial>& generators, std::size_t variable_count) {
    for (const auto& g : generators)
        if (!g.is_zero() && !g.is_term())
            throw std::logic_error("generator '" + g.to_string() + "' is not a monomial times a unit");

    const auto valid = [&](std::uint32_t mask) {
        for (const auto& g : generators) {
            if (g.is_zero()) continue;
            const Monomial& m = g.terms().begin()->first;
            bool hit = false;
            for (std::size_t v = 0; v < m.variable_bound(); ++v)
                if (m.exponent(v) > 0 && (mask >> v & 1u)) hit = true;
            if (!hit) return false;
        }
        return true;
    };

    const std::uint32_t limit = 1u << variable_count;
    std::vector<std::uint32_t> minimal;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        if (!valid(mask)) continue;
        bool has_valid_subset = false;
        for (auto m : minimal)
            if ((m & mask) == m) has_valid_subset = true;
        if (!has_valid_subset) minimal.push_back(mask);
    }

    MonomialVariety out{variable_count, {}};
    for (auto mask : minimal) {
        MonomialVariety::Component c;
        for (std::size_t v = 0; v < variable_count; ++v)
            if (mask >> v & 1u) c.zero_vars.push_back(v);
        out.components.push_back(std::move(c));
    }
    std::sort(out.components.begin(), out.components.end(), [](const auto& a, const auto& b) {
        if (a.zero_vars.size() != b.zero_vars.size()) return a.zero_vars.size() < b.zero_vars.size();
        return a.zero_vars < b.zero_vars;
    });
    return out;
}

bool polynomial_span_contains(const std::vector<Polynomial>& generators, const Polynomial& p) {
    std::map<Monomial, std::size_t, GrlexGreater> coordinate;
    const auto collect = [&](const Polynomial& q) {
        for (const auto& [m, c] : q.terms()) coordinate.emplace(m, 0);
    };
    for (const auto& g : generators) collect(g);
    collect(p);
    std::size_t next = 0;
    for (auto& [m, index] : coordinate) index = next++;
    const auto as_vector = [&](const Polynomial& q) {
        Vector v(coordinate.size());
        for (const auto& [m, c] : q.terms()) v[coordinate.at(m)] = c;
        return v;
    };
    std::vector<Vector> basis;
    for (const auto& g : generators) basis.push_back(as_vector(g));
    return span_contains(basis, as_vector(p));
}

MonomialVariety claimed_plane_solution_set() { return MonomialVariety{2, {{{0}}, {{1}}}}; }

VarietyReport dim2_skew_solve(const AxiomSet& axioms) {
    VarietyReport report;
    report.axioms = axioms;
    report.system = constraint_system(2, axioms);
    report.reduced_system = reduce_all(report.system);
    report.variety = solve_monomial_system(report.reduced_system, 2);

    const AxiomSet expanded = expand(axioms);
    if (expanded.count(Axiom::jacobi)) {
        AxiomSet per_term = expanded;
        per_term.erase(Axiom::jacobi);
        per_term.insert(Axiom::nilpotent);
        report.per_term_jacobi = solve_monomial_system(reduce_all(constraint_system(2, per_term)), 2);
    }

    for (const auto& p : {point(1, 0), point(0, 1), point(-2, 0), point(0, 3), point(0, 0)})
        report.sampled_claims.push_back({p, family_audit(p[0], p[1])});

    const MonomialVariety claimed = claimed_plane_solution_set();
    if (!(report.variety == claimed)) {
        Discrepancy d;
        d.claim = "solution set F = (R x {0}) u ({0} x R)";
        d.computed = report.variety.describe(plane_variable_name);
        for (const auto& p : {point(1, 0), point(0, 1), point(1, 1), point(0, 0)}) {
            const bool in_claim = claimed.contains(p);
            if (in_claim == report.variety.contains(p)) continue;
            d.witness_point = p;
            d.witness_note = in_claim ? "in F but not in the computed variety" : "in the computed variety but not in F";
            break;
        }
        report.flags.push_back(std::move(d));
    }

    for (const auto& s : report.sampled_claims) {
        if (!claimed.contains(s.point) || s.audit.passes(axioms)) continue;
        Discrepancy d;
        d.claim = "every member of F satisfies the requested axioms";
        for (Axiom a : axioms)
            if (!s.audit.passes(a)) {
                d.computed = "fails " + std::string(axiom_name(a));
                break;
            }
        d.witness_point = s.point;
        d.witness_note = "family member " + point_text(s.point);
        report.flags.push_back(std::move(d));
        break;
    }
    return report;
}

std::uint64_t grid_candidate_count(std::size_t dim, std::uint32_t bound, std::uint32_t denominator,
                                   const AxiomSet& axioms) {
    const std::size_t free = free_slots(dim, is_skew_scan(axioms)).size();
    const std::uint64_t per_slot = 2ull * bound * denominator + 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) {
        if (count > std::numeric_limits<std::uint64_t>::max() / per_slot)
            return std::numeric_limits<std::uint64_t>::max();
        count *= per_slot;
    }
    return count;
}

BilinearStructure normalize_scaling(const BilinearStructure& mu) {
    for (const auto& c : mu.constants())
        if (!c.is_zero()) return scale(mu, Rational(1) / c);
    return mu;
}

std::optional<Rational> scaling_factor(const BilinearStructure& a, const BilinearStructure& b) {
    if (a.dim() != b.dim()) return std::nullopt;
    Rational lambda(1);
    for (std::size_t i = 0; i < a.constants().size(); ++i)
        if (!a.constants()[i].is_zero()) {
            lambda = b.constants()[i] / a.constants()[i];
            break;
        }
    if (scale(a, lambda) == b) return lambda;
    return std::nullopt;
}

std::vector<BilinearStructure> grid_scan(std::size_t dim, std::uint32_t bound, std::uint32_t denominator,
                                         const AxiomSet& axioms, bool dedup) {
    if (dim > classify_max_dim)
        throw SizeGuardError("grid scans are limited to dim <= " + std::to_string(classify_max_dim));
    if (denominator == 0) throw MalformedInput("grid denominator must be positive");
    const std::uint64_t count = grid_candidate_count(dim, bound, denominator, axioms);
    if (count > grid_scan_max_candidates)
        throw SizeGuardError("grid scan of " + std::to_string(count) + " candidates exceeds the limit of " +
                             std::to_string(grid_scan_max_candidates));

    const bool skew = is_skew_scan(axioms);
    const auto slots = free_slots(dim, skew);
    const AxiomSet required = expand(axioms);
    const long steps = static_cast<long>(bound) * static_cast<long>(denominator);

    std::set<BilinearStructure, ConstantsLess> kept;
    std::vector<long> digits(slots.size(), -steps);
    for (std::uint64_t n = 0; n < count; ++n) {
        BilinearStructure mu(dim);
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const Rational v(digits[s], static_cast<long>(denominator));
            mu.constants()[slots[s]] = v;
            if (skew) {
                const std::size_t k = slots[s] % dim;
                const std::size_t j = (slots[s] / dim) % dim;
                const std::size_t i = slots[s] / (dim * dim);
                mu(j, i, k) = -v;
            }
        }
        const bool pass = std::all_of(required.begin(), required.end(),
                                      [&](Axiom a) { return check_axiom(mu, a).pass; });
        if (pass) kept.insert(dedup ? normalize_scaling(mu) : mu);

        for (std::size_t s = slots.size(); s-- > 0;) {
            if (++digits[s] <= steps) break;
            digits[s] = -steps;
        }
    }
    return {kept.begin(), kept.end()};
}

AuditReport family_audit(const Rational& x0, const Rational& y0) {
    return axiom_audit(plane_skew_structure(x0, y0));
}

PencilReport pencil_closure_check(const std::vector<BilinearStructure>& structures, const AxiomSet& axioms,
                                  std::size_t samples, std::uint64_t seed) {
    for (const auto& mu : structures)
        if (mu.dim() != structures.front().dim())
            throw MalformedInput("pencil closure check needs structures of equal dimension");
    PencilReport report;
    if (structures.empty()) return report;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, structures.size() - 1);
    std::uniform_int_distribution<long> num(1, 5);
    std::uniform_int_distribution<long> den(1, 5);
    std::bernoulli_distribution negative(0.5);
    const AxiomSet required = expand(axioms);

    for (std::size_t t = 0; t < samples; ++t) {
        const std::size_t i = pick(rng);
        const std::size_t j = pick(rng);
        const long p = num(rng);
        const Rational lambda(negative(rng) ? -p : p, den(rng));
        const BilinearStructure combo = combine(structures[i], lambda, structures[j]);
        ++report.trials;
        for (Axiom a : required) {
            Verdict v = check_axiom(combo, a);
            if (v.pass) continue;
            ++report.failures;
            if (report.counterexamples.size() < 8)
                report.counterexamples.push_back({i, j, lambda, a, std::move(*v.witness)});
            break;
        }
    }
    return report;
}

} // namespace kvp
