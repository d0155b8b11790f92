#include "kvp/matrix.hpp"

#include "kvp/errors.hpp"

namespace kvp {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw MalformedInput("matrix entry count does not match its shape");
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return {};
    const std::size_t cols = rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols) throw MalformedInput("ragged rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return {rows.size(), cols, std::move(entries)};
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t length) {
    Matrix m(length, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != length) throw MalformedInput("vector length mismatch");
        for (std::size_t r = 0; r < length; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw MalformedInput("matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

Vector operator*(const Matrix& m, std::span<const Rational> v) {
    if (m.cols() != v.size()) throw MalformedInput("matrix-vector shape mismatch");
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

Matrix operator*(const Rational& s, const Matrix& m) {
    Matrix out = m;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) *= s;
    return out;
}

std::string to_string(const Matrix& m) {
    std::string s = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        s += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) s += ", ";
            s += m(r, c).to_string();
        }
        s += "]";
    }
    return s + "]";
}

} // namespace kvp
