#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kvp/rational.hpp"

namespace kvp {

/// Exponent vector; trailing zero exponents are never stored so that equal
/// monomials compare equal regardless of how many variables were touched.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::uint32_t> exponents);
    static Monomial variable(std::size_t index, std::uint32_t power = 1);

    std::uint32_t exponent(std::size_t index) const {
        return index < exps_.size() ? exps_[index] : 0;
    }
    std::size_t variable_bound() const { return exps_.size(); }
    std::uint32_t degree() const;
    bool is_one() const { return exps_.empty(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// broken by the first differing exponent (variable 0 is the largest).
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

using VariableNamer = std::function<std::string(std::size_t)>;

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexGreater>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
    Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT
    Polynomial(const Monomial& m, const Rational& coefficient);
    static Polynomial variable(std::size_t index);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    std::uint32_t degree() const;

    /// Leading coefficient in grlex order; zero for the zero polynomial.
    Rational leading_coefficient() const;
    /// Scaled so that the leading coefficient is 1 (zero stays zero).
    Polynomial monic() const;
    /// A single term: monomial times a nonzero constant.
    bool is_term() const { return terms_.size() == 1; }

    Rational evaluate(std::span<const Rational> point) const;
    /// Replaces variable i by images[i]; variables beyond images.size() must
    /// not occur.
    Polynomial substitute(std::span<const Polynomial> images) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Canonical text, e.g. `x^2 - 1/2*x*y + 3`. Default names are `v0, v1, ...`.
    std::string to_string(const VariableNamer& name = {}) const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

/// Total order on polynomials (for sorting and deduplication): compares term
/// sequences in grlex order, then coefficients.
bool polynomial_less(const Polynomial& a, const Polynomial& b);

} // namespace kvp
