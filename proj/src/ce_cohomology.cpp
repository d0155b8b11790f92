#include "kvp/ce_cohomology.hpp"

#include "kvp/cochain_index.hpp"
#include "kvp/exactla.hpp"

namespace kvp {

namespace {

Cochain unit_cochain(std::size_t n, std::size_t q, std::size_t index) {
    Cochain f{n, q, CochainKind::alternating, Vector(ce_cochain_dim(n, q))};
    f.coefficients[index] = 1;
    return f;
}

Cochain apply_delta(const BilinearStructure& mu, const BilinearStructure& action, const Cochain& f) {
    const std::size_t n = mu.dim();
    const std::size_t q = f.degree;
    Cochain out{n, q + 1, CochainKind::alternating, Vector(ce_cochain_dim(n, q + 1))};
    if (q + 1 > n) return out;

    const auto tuples = increasing_tuples(n, q + 1);
    std::vector<std::size_t> args;
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto& a = tuples[t];
        Vector value(n);

        // sum_i (-1)^{i+1} rho(a_i) f(a without a_i), i 1-based
        for (std::size_t i = 0; i <= q; ++i) {
            args.clear();
            for (std::size_t s = 0; s <= q; ++s)
                if (s != i) args.push_back(a[s]);
            const Vector fv = f.value(args);
            const bool plus = i % 2 == 0;
            for (std::size_t l = 0; l < n; ++l) {
                if (fv[l].is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k) {
                    const Rational& r = action(a[i], l, k);
                    if (r.is_zero()) continue;
                    if (plus)
                        value[k] += fv[l] * r;
                    else
                        value[k] -= fv[l] * r;
                }
            }
        }

        // sum_{i<j} (-1)^{i+j} f(mu(a_i, a_j), rest)
        for (std::size_t i = 0; i <= q; ++i)
            for (std::size_t j = i + 1; j <= q; ++j) {
                const bool plus = (i + j) % 2 == 0;
                for (std::size_t l = 0; l < n; ++l) {
                    const Rational& m = mu(a[i], a[j], l);
                    if (m.is_zero()) continue;
                    args.assign(1, l);
                    for (std::size_t s = 0; s <= q; ++s)
                        if (s != i && s != j) args.push_back(a[s]);
                    const Vector fv = f.value(args);
                    for (std::size_t k = 0; k < n; ++k) {
                        if (fv[k].is_zero()) continue;
                        if (plus)
                            value[k] += m * fv[k];
                        else
                            value[k] -= m * fv[k];
                    }
                }
            }

        for (std::size_t k = 0; k < n; ++k) out.coefficients[t * n + k] = value[k];
    }
    return out;
}

} // namespace

std::size_t ce_cochain_dim(std::size_t n, std::size_t q) { return binomial(n, q) * n; }

Matrix ce_delta_matrix(const BilinearStructure& mu, std::size_t q) { return ce_delta_matrix(mu, mu, q); }

Matrix ce_delta_matrix(const BilinearStructure& mu, const BilinearStructure& action, std::size_t q) {
    if (action.dim() != mu.dim()) throw MalformedInput("action tensor dimension differs from the structure");
    const std::size_t n = mu.dim();
    const std::size_t cols = ce_cochain_dim(n, q);
    const std::size_t rows = ce_cochain_dim(n, q + 1);
    Matrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const Cochain image = apply_delta(mu, action, unit_cochain(n, q, c));
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = image.coefficients[r];
    }
    return m;
}

Cochain ce_apply_delta(const BilinearStructure& mu, const Cochain& f) {
    if (f.dim_v != mu.dim() || f.kind != CochainKind::alternating ||
        f.coefficients.size() != ce_cochain_dim(f.dim_v, f.degree))
        throw MalformedInput("cochain does not belong to the CE complex of this structure");
    return apply_delta(mu, mu, f);
}

ComplexReport ce_complex_report(const BilinearStructure& mu, std::size_t q_max) {
    const Verdict jacobi = check_axiom(mu, Axiom::jacobi);
    if (!jacobi.pass) throw ComplexRefused("ce", Axiom::jacobi, *jacobi.witness);

    const std::size_t n = mu.dim();
    ComplexReport report{"ce", {}};
    std::size_t incoming_rank = 0;
    for (std::size_t q = 0; q <= q_max; ++q) {
        DegreeRow row;
        row.degree = q;
        row.cochain_dim = ce_cochain_dim(n, q);
        row.rank = rank(ce_delta_matrix(mu, q));
        row.kernel = row.cochain_dim - row.rank;
        row.betti = static_cast<long>(row.kernel) - static_cast<long>(incoming_rank);
        incoming_rank = row.rank;
        report.rows.push_back(row);
    }
    return report;
}

std::vector<Cochain> ce_cocycle_basis(const BilinearStructure& mu, std::size_t q) {
    std::vector<Cochain> out;
    for (auto& v : nullspace_basis(ce_delta_matrix(mu, q)))
        out.push_back(Cochain{mu.dim(), q, CochainKind::alternating, std::move(v)});
    return out;
}

SquareZeroResult ce_square_zero_check(const BilinearStructure& mu, std::size_t q) {
    const auto col = first_nonzero_composite_column(ce_delta_matrix(mu, q + 1), ce_delta_matrix(mu, q));
    if (!col) return {};
    return {false, unit_cochain(mu.dim(), q, *col)};
}

} // namespace kvp
