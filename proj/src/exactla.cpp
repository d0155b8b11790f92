#include "kvp/exactla.hpp"

#include <utility>

#include "kvp/errors.hpp"

namespace kvp {

namespace {

using IntRow = std::vector<mpz_class>;

std::vector<IntRow> clear_denominators(const Matrix& m) {
    std::vector<IntRow> out(m.rows(), IntRow(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class scale = 1;
        for (const auto& x : m.row(r)) scale = lcm(scale, x.denominator());
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const Rational& x = m(r, c);
            out[r][c] = x.numerator() * (scale / x.denominator());
        }
    }
    return out;
}

std::size_t common_length(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    std::size_t len = 0;
    bool seen = false;
    for (const auto* list : {&a, &b})
        for (const auto& v : *list) {
            if (seen && v.size() != len) throw MalformedInput("subspace vectors of unequal length");
            len = v.size();
            seen = true;
        }
    return len;
}

Matrix stack(const std::vector<Vector>& a, const std::vector<Vector>& b, std::size_t len) {
    std::vector<Vector> rows;
    rows.reserve(a.size() + b.size());
    rows.insert(rows.end(), a.begin(), a.end());
    rows.insert(rows.end(), b.begin(), b.end());
    if (rows.empty()) return Matrix(0, len);
    return Matrix::from_rows(rows);
}

} // namespace

std::size_t rank(const Matrix& m) {
    auto a = clear_denominators(m);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

EchelonForm reduced_row_echelon(const Matrix& m) {
    EchelonForm out{m, {}};
    Matrix& a = out.reduced;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        const Rational inv = Rational(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Rational f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    return out;
}

std::vector<Vector> nullspace_basis(const Matrix& m) {
    const auto ech = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ech.pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool subspace_equal(const std::vector<Vector>& a, const std::vector<Vector>& b) {
    const std::size_t len = common_length(a, b);
    const std::size_t ra = rank(stack(a, {}, len));
    const std::size_t rb = rank(stack(b, {}, len));
    if (ra != rb) return false;
    return rank(stack(a, b, len)) == ra;
}

bool span_contains(const std::vector<Vector>& basis, const Vector& v) {
    const std::size_t len = common_length(basis, {v});
    return rank(stack(basis, {v}, len)) == rank(stack(basis, {}, len));
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw MalformedInput("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return {};
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const auto ech = reduced_row_echelon(aug);
    if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1)
        throw SingularMatrix("matrix is singular");
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
    return inv;
}

} // namespace kvp
