#include "kvp/kv_cohomology.hpp"

#include <string>

#include "kvp/cochain_index.hpp"
#include "kvp/exactla.hpp"

namespace kvp {

namespace {

void add_scaled(Vector& acc, const Vector& v, const Rational& s) {
    if (s.is_zero()) return;
    for (std::size_t k = 0; k < acc.size(); ++k)
        if (!v[k].is_zero()) acc[k] += s * v[k];
}

/// mu(e_a, v)
Vector left_mult(const BilinearStructure& mu, std::size_t a, const Vector& v) {
    Vector out(mu.dim());
    for (std::size_t l = 0; l < mu.dim(); ++l)
        for (std::size_t k = 0; k < mu.dim(); ++k)
            if (!v[l].is_zero() && !mu(a, l, k).is_zero()) out[k] += v[l] * mu(a, l, k);
    return out;
}

/// mu(v, e_a)
Vector right_mult(const BilinearStructure& mu, const Vector& v, std::size_t a) {
    Vector out(mu.dim());
    for (std::size_t l = 0; l < mu.dim(); ++l)
        for (std::size_t k = 0; k < mu.dim(); ++k)
            if (!v[l].is_zero() && !mu(l, a, k).is_zero()) out[k] += v[l] * mu(l, a, k);
    return out;
}

Cochain unit_cochain(std::size_t n, std::size_t q, std::size_t index) {
    Cochain f{n, q, CochainKind::unrestricted, Vector(kv_cochain_dim(n, q))};
    f.coefficients[index] = 1;
    return f;
}

Cochain delta_zero(const BilinearStructure& mu, const Cochain& xi) {
    const std::size_t n = mu.dim();
    Cochain out{n, 1, CochainKind::unrestricted, Vector(kv_cochain_dim(n, 1))};
    for (std::size_t a = 0; a < n; ++a) {
        Vector v = left_mult(mu, a, xi.coefficients);
        add_scaled(v, right_mult(mu, xi.coefficients, a), Rational(-1));
        for (std::size_t k = 0; k < n; ++k) out.coefficients[a * n + k] = v[k];
    }
    return out;
}

Cochain delta_positive(const BilinearStructure& mu, const Cochain& f) {
    const std::size_t n = mu.dim();
    const std::size_t q = f.degree;
    Cochain out{n, q + 1, CochainKind::unrestricted, Vector(kv_cochain_dim(n, q + 1))};

    std::vector<std::size_t> a(q + 1, 0);
    std::vector<std::size_t> rest;
    std::vector<std::size_t> args;
    const std::size_t tuple_count = power(n, q + 1);
    for (std::size_t t = 0; t < tuple_count; ++t) {
        for (std::size_t pos = q + 1, rem = t; pos-- > 0; rem /= n) a[pos] = rem % n;

        Vector value(n);
        for (std::size_t j = 0; j < q; ++j) {
            Vector term(n);
            rest.clear();
            for (std::size_t s = 0; s <= q; ++s)
                if (s != j) rest.push_back(a[s]);

            // (a_j . f)(rest)
            term = left_mult(mu, a[j], f.value(rest));
            for (std::size_t s = 0; s < q; ++s) {
                args = rest;
                for (std::size_t l = 0; l < n; ++l) {
                    const Rational& w = mu(a[j], rest[s], l);
                    if (w.is_zero()) continue;
                    args[s] = l;
                    add_scaled(term, f.value(args), -w);
                }
            }

            // f(a_1..^a_j..a_q, a_j) a_{q+1}
            args.clear();
            for (std::size_t s = 0; s < q; ++s)
                if (s != j) args.push_back(a[s]);
            args.push_back(a[j]);
            add_scaled(term, right_mult(mu, f.value(args), a[q]), Rational(1));

            // (-1)^{j+1} with 0-based j
            add_scaled(value, term, Rational(j % 2 == 0 ? -1 : 1));
        }
        for (std::size_t k = 0; k < n; ++k) out.coefficients[t * n + k] = value[k];
    }
    return out;
}

Matrix delta_matrix(const BilinearStructure& mu, std::size_t q) {
    const std::size_t n = mu.dim();
    const std::size_t cols = kv_cochain_dim(n, q);
    const std::size_t rows = kv_cochain_dim(n, q + 1);
    Matrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
        const Cochain image = kv_apply_delta(mu, unit_cochain(n, q, c));
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = image.coefficients[r];
    }
    return m;
}

} // namespace

std::size_t kv_cochain_dim(std::size_t n, std::size_t q) { return power(n, q + 1); }

Matrix kv_delta_matrix(const BilinearStructure& mu, std::size_t q) { return delta_matrix(mu, q); }

Cochain kv_apply_delta(const BilinearStructure& mu, const Cochain& f) {
    if (f.dim_v != mu.dim() || f.kind != CochainKind::unrestricted ||
        f.coefficients.size() != kv_cochain_dim(f.dim_v, f.degree))
        throw MalformedInput("cochain does not belong to the KV complex of this structure");
    return f.degree == 0 ? delta_zero(mu, f) : delta_positive(mu, f);
}

std::vector<Vector> kv_invariant_subspace(const BilinearStructure& mu) {
    const std::size_t n = mu.dim();
    Matrix m(n * n * n, n);
    for (std::size_t l = 0; l < n; ++l) {
        const auto el = basis_vector<Rational>(n, l);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Vector r =
                    associator(mu, basis_vector<Rational>(n, a), basis_vector<Rational>(n, b), el);
                for (std::size_t k = 0; k < n; ++k) m((a * n + b) * n + k, l) = r[k];
            }
    }
    return nullspace_basis(m);
}

SquareZeroResult kv_square_zero_check(const BilinearStructure& mu, std::size_t q) {
    const std::size_t n = mu.dim();
    if (q == 0) {
        const auto j_basis = kv_invariant_subspace(mu);
        const Matrix restricted = kv_delta_matrix(mu, 0) * Matrix::from_columns(j_basis, n);
        const auto col = first_nonzero_composite_column(kv_delta_matrix(mu, 1), restricted);
        if (!col) return {};
        return {false, Cochain{n, 0, CochainKind::unrestricted, j_basis[*col]}};
    }
    const auto col = first_nonzero_composite_column(kv_delta_matrix(mu, q + 1), kv_delta_matrix(mu, q));
    if (!col) return {};
    return {false, unit_cochain(n, q, *col)};
}

ComplexReport kv_complex_report(const BilinearStructure& mu, std::size_t q_max) {
    if (q_max > kv_max_degree)
        throw SizeGuardError("kv complex supports degrees up to " + std::to_string(kv_max_degree) +
                             ", requested " + std::to_string(q_max));
    const Verdict kv = check_axiom(mu, Axiom::kv);
    if (!kv.pass) throw ComplexRefused("kv", Axiom::kv, *kv.witness);

    for (std::size_t q = 0; q < q_max; ++q)
        if (!kv_square_zero_check(mu, q).holds)
            throw SquareZeroViolation("kv complex: delta^" + std::to_string(q + 1) + " o delta^" +
                                      std::to_string(q) + " != 0 on a KV algebra");

    const std::size_t n = mu.dim();
    ComplexReport report{"kv", {}};
    std::size_t incoming_rank = 0;
    for (std::size_t q = 0; q <= q_max; ++q) {
        DegreeRow row;
        row.degree = q;
        if (q == 0) {
            const auto j_basis = kv_invariant_subspace(mu);
            row.cochain_dim = j_basis.size();
            row.rank = rank(kv_delta_matrix(mu, 0) * Matrix::from_columns(j_basis, n));
        } else {
            row.cochain_dim = kv_cochain_dim(n, q);
            row.rank = rank(kv_delta_matrix(mu, q));
        }
        row.kernel = row.cochain_dim - row.rank;
        row.betti = static_cast<long>(row.kernel) - static_cast<long>(incoming_rank);
        incoming_rank = row.rank;
        report.rows.push_back(row);
    }
    return report;
}

} // namespace kvp
