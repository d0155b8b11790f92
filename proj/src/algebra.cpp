#include "kvp/algebra.hpp"

#include <algorithm>

#include "kvp/exactla.hpp"

namespace kvp {

namespace {

constexpr std::array<std::string_view, all_axioms.size()> kAxiomNames = {
    "symmetric", "skew", "kv", "jacobi", "leibniz-self", "nilpotent", "kv-poisson"};

bool is_zero(const Vector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::vector<std::size_t> one_based(const std::vector<std::size_t>& tuple) {
    std::vector<std::size_t> out(tuple);
    for (auto& i : out) ++i;
    return out;
}

} // namespace

std::string_view axiom_name(Axiom a) { return kAxiomNames[static_cast<std::size_t>(a)]; }

std::optional<Axiom> parse_axiom(std::string_view name) {
    std::string s(name);
    std::replace(s.begin(), s.end(), '_', '-');
    for (auto a : all_axioms)
        if (axiom_name(a) == s) return a;
    return std::nullopt;
}

AxiomSet parse_axiom_list(std::string_view list) {
    AxiomSet out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const auto comma = list.find(',', start);
        const auto end = comma == std::string_view::npos ? list.size() : comma;
        std::string_view item = list.substr(start, end - start);
        while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
        if (!item.empty()) {
            auto a = parse_axiom(item);
            if (!a) throw MalformedInput("unknown axiom '" + std::string(item) + "'");
            out.insert(*a);
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const AxiomSet& axioms) {
    std::string s;
    for (auto a : axioms) {
        if (!s.empty()) s += ",";
        s += axiom_name(a);
    }
    return s;
}

std::size_t axiom_arity(Axiom a) {
    switch (a) {
    case Axiom::symmetric:
    case Axiom::skew: return 2;
    case Axiom::kv_poisson: return 0;
    default: return 3;
    }
}

std::vector<std::vector<std::size_t>> basis_tuples(std::size_t n, std::size_t arity) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(arity, 0);
    while (true) {
        out.push_back(t);
        std::size_t pos = arity;
        while (pos > 0) {
            --pos;
            if (++t[pos] < n) break;
            t[pos] = 0;
            if (pos == 0) return out;
        }
        if (arity == 0) return out;
    }
}

bool AuditReport::passes(const AxiomSet& axioms) const {
    return std::all_of(axioms.begin(), axioms.end(), [&](Axiom a) { return passes(a); });
}

Verdict check_axiom(const BilinearStructure& mu, Axiom axiom) {
    if (axiom == Axiom::kv_poisson) {
        Verdict skew = check_axiom(mu, Axiom::skew);
        if (!skew.pass) return skew;
        return check_axiom(mu, Axiom::nilpotent);
    }
    for (const auto& t : basis_tuples(mu.dim(), axiom_arity(axiom))) {
        auto r = axiom_residual(mu, axiom, t);
        if (!is_zero(r)) return Verdict{false, Witness{one_based(t), std::move(r)}};
    }
    return {};
}

AuditReport axiom_audit(const BilinearStructure& mu) {
    AuditReport report;
    for (auto a : all_axioms) {
        if (a == Axiom::kv_poisson) continue;
        report[a] = check_axiom(mu, a);
    }
    const Verdict& skew = report[Axiom::skew];
    report[Axiom::kv_poisson] = skew.pass ? report[Axiom::nilpotent] : skew;
    return report;
}

Vector evaluate(const BilinearStructure& mu, const Vector& u, const Vector& v) { return product(mu, u, v); }

BilinearStructure combine(const BilinearStructure& mu1, const Rational& lambda, const BilinearStructure& mu2) {
    if (mu1.dim() != mu2.dim()) throw MalformedInput("combining structures of different dimension");
    BilinearStructure out = mu1;
    auto& c = out.constants();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += lambda * mu2.constants()[i];
    return out;
}

BilinearStructure scale(const BilinearStructure& mu, const Rational& lambda) {
    BilinearStructure out = mu;
    for (auto& x : out.constants()) x *= lambda;
    return out;
}

BilinearStructure antisymmetrize(const BilinearStructure& mu) {
    const std::size_t n = mu.dim();
    BilinearStructure out(n);
    const Rational half(1, 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out(i, j, k) = (mu(i, j, k) - mu(j, i, k)) * half;
    return out;
}

BilinearStructure change_basis(const BilinearStructure& mu, const Matrix& p) {
    const std::size_t n = mu.dim();
    if (p.rows() != n || p.cols() != n) throw MalformedInput("basis change matrix has the wrong size");
    const Matrix p_inv = inverse(p);
    BilinearStructure out(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Vector image = p_inv * product(mu, p.column(a), p.column(b));
            for (std::size_t k = 0; k < n; ++k) out(a, b, k) = image[k];
        }
    return out;
}

BilinearStructure plane_skew_structure(const Rational& x0, const Rational& y0) {
    BilinearStructure mu(2);
    mu(0, 1, 0) = x0;
    mu(0, 1, 1) = y0;
    mu(1, 0, 0) = -x0;
    mu(1, 0, 1) = -y0;
    return mu;
}

} // namespace kvp
