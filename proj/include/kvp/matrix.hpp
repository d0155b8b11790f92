#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kvp/rational.hpp"

namespace kvp {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of rationals. Zero-sized matrices are valid.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    /// Row-by-row construction; all rows must have the same length.
    static Matrix from_rows(const std::vector<Vector>& rows);
    /// Vectors become the columns of the result; `length` fixes the row count
    /// when the list is empty.
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t length);
    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    Vector column(std::size_t c) const;
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const;
    Matrix transposed() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& m, std::span<const Rational> v);
Matrix operator*(const Rational& s, const Matrix& m);

std::string to_string(const Matrix& m);

} // namespace kvp
