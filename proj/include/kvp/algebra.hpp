#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kvp/errors.hpp"
#include "kvp/matrix.hpp"
#include "kvp/polynomial.hpp"
#include "kvp/rational.hpp"

namespace kvp {

/// Structure constants of a bilinear product on a based n-dimensional space:
/// mu(e_i, e_j) = sum_k c(i, j, k) e_k. Indices are 0-based here; files and
/// reports use 1-based indices.
template <class T>
class BasicStructure {
public:
    explicit BasicStructure(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {
        if (dim == 0) throw MalformedInput("structure dimension must be at least 1");
    }

    std::size_t dim() const { return dim_; }
    T& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const T& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    /// Flattened constants, index (i*n + j)*n + k.
    const std::vector<T>& constants() const { return c_; }
    std::vector<T>& constants() { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const BasicStructure&, const BasicStructure&) = default;

private:
    std::size_t dim_;
    std::vector<T> c_;
};

using BilinearStructure = BasicStructure<Rational>;
using SymbolicStructure = BasicStructure<Polynomial>;

// ---------------------------------------------------------------------------
// Scalar-generic evaluation and identity residuals.

template <class T>
std::vector<T> basis_vector(std::size_t n, std::size_t i) {
    std::vector<T> v(n);
    v[i] = T(1);
    return v;
}

namespace detail {

template <class T>
void check_length(const BasicStructure<T>& mu, const std::vector<T>& v) {
    if (v.size() != mu.dim()) throw MalformedInput("vector length does not match structure dimension");
}

template <class T>
std::vector<T>& axpy(std::vector<T>& acc, const std::vector<T>& v, int sign) {
    for (std::size_t i = 0; i < acc.size(); ++i) {
        if (sign > 0)
            acc[i] += v[i];
        else
            acc[i] -= v[i];
    }
    return acc;
}

} // namespace detail

/// Bilinear extension: sum_{i,j} u_i v_j mu(e_i, e_j).
template <class T>
std::vector<T> product(const BasicStructure<T>& mu, const std::vector<T>& u, const std::vector<T>& v) {
    detail::check_length(mu, u);
    detail::check_length(mu, v);
    const std::size_t n = mu.dim();
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j].is_zero()) continue;
            const T uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!mu(i, j, k).is_zero()) out[k] += uv * mu(i, j, k);
        }
    }
    return out;
}

/// (ab)c - a(bc)
template <class T>
std::vector<T> associator(const BasicStructure<T>& mu, const std::vector<T>& a, const std::vector<T>& b,
                          const std::vector<T>& c) {
    auto out = product(mu, product(mu, a, b), c);
    return detail::axpy(out, product(mu, a, product(mu, b, c)), -1);
}

/// Ass(a,b,c) - Ass(b,a,c); vanishes identically exactly on KV algebras.
template <class T>
std::vector<T> kv_anomaly(const BasicStructure<T>& mu, const std::vector<T>& a, const std::vector<T>& b,
                          const std::vector<T>& c) {
    auto out = associator(mu, a, b, c);
    return detail::axpy(out, associator(mu, b, a, c), -1);
}

/// u(vw) + v(wu) + w(uv)
template <class T>
std::vector<T> jacobiator(const BasicStructure<T>& mu, const std::vector<T>& u, const std::vector<T>& v,
                          const std::vector<T>& w) {
    auto out = product(mu, u, product(mu, v, w));
    detail::axpy(out, product(mu, v, product(mu, w, u)), +1);
    return detail::axpy(out, product(mu, w, product(mu, u, v)), +1);
}

/// (uv)w - u(vw) - v(uw), with the product in both the bracket and the
/// multiplication role.
template <class T>
std::vector<T> leibniz_residual(const BasicStructure<T>& mu, const std::vector<T>& u, const std::vector<T>& v,
                                const std::vector<T>& w) {
    auto out = product(mu, product(mu, u, v), w);
    detail::axpy(out, product(mu, u, product(mu, v, w)), -1);
    return detail::axpy(out, product(mu, v, product(mu, u, w)), -1);
}

/// w(uv)
template <class T>
std::vector<T> nilpotency_residual(const BasicStructure<T>& mu, const std::vector<T>& w, const std::vector<T>& u,
                                   const std::vector<T>& v) {
    return product(mu, w, product(mu, u, v));
}

// ---------------------------------------------------------------------------
// Axioms and audits.

enum class Axiom { symmetric, skew, kv, jacobi, leibniz_self, nilpotent, kv_poisson };

inline constexpr std::array<Axiom, 7> all_axioms = {Axiom::symmetric, Axiom::skew,      Axiom::kv,
                                                    Axiom::jacobi,    Axiom::leibniz_self, Axiom::nilpotent,
                                                    Axiom::kv_poisson};

using AxiomSet = std::set<Axiom>;

/// Canonical names: symmetric, skew, kv, jacobi, leibniz-self, nilpotent,
/// kv-poisson.
std::string_view axiom_name(Axiom a);
/// Accepts canonical names; `_` may replace `-`.
std::optional<Axiom> parse_axiom(std::string_view name);
/// Comma-separated list; throws MalformedInput naming the unknown entry.
AxiomSet parse_axiom_list(std::string_view list);
std::string to_string(const AxiomSet& axioms);

/// Number of basis arguments of an axiom's residual (2 or 3); kv-poisson is
/// composite and has none.
std::size_t axiom_arity(Axiom a);

/// Residual of a non-composite axiom on a basis tuple (0-based indices).
template <class T>
std::vector<T> axiom_residual(const BasicStructure<T>& mu, Axiom axiom, std::span<const std::size_t> tuple) {
    const std::size_t n = mu.dim();
    const auto e = [&](std::size_t k) { return basis_vector<T>(n, tuple[k]); };
    switch (axiom) {
    case Axiom::symmetric: {
        auto out = product(mu, e(0), e(1));
        return detail::axpy(out, product(mu, e(1), e(0)), -1);
    }
    case Axiom::skew: {
        auto out = product(mu, e(0), e(1));
        return detail::axpy(out, product(mu, e(1), e(0)), +1);
    }
    case Axiom::kv: return kv_anomaly(mu, e(0), e(1), e(2));
    case Axiom::jacobi: return jacobiator(mu, e(0), e(1), e(2));
    case Axiom::leibniz_self: return leibniz_residual(mu, e(0), e(1), e(2));
    case Axiom::nilpotent: return nilpotency_residual(mu, e(0), e(1), e(2));
    case Axiom::kv_poisson: break;
    }
    throw MalformedInput("kv-poisson is composite and has no single residual");
}

/// Every tuple in {0..n-1}^arity in lexicographic order.
std::vector<std::vector<std::size_t>> basis_tuples(std::size_t n, std::size_t arity);

struct Witness {
    std::vector<std::size_t> indices;  ///< 1-based basis indices
    Vector residual;
};

struct Verdict {
    bool pass = true;
    std::optional<Witness> witness;
};

struct AuditReport {
    std::array<Verdict, all_axioms.size()> verdicts;

    const Verdict& operator[](Axiom a) const { return verdicts[static_cast<std::size_t>(a)]; }
    Verdict& operator[](Axiom a) { return verdicts[static_cast<std::size_t>(a)]; }
    bool passes(Axiom a) const { return (*this)[a].pass; }
    bool passes(const AxiomSet& axioms) const;
};

/// Checks every axiom on all basis tuples; the witness of a failure is the
/// lexicographically first failing tuple. kv-poisson = skew and nilpotent.
AuditReport axiom_audit(const BilinearStructure& mu);

/// Single-axiom check with the same witness convention as axiom_audit.
Verdict check_axiom(const BilinearStructure& mu, Axiom axiom);

// ---------------------------------------------------------------------------
// Rational-only operations.

Vector evaluate(const BilinearStructure& mu, const Vector& u, const Vector& v);

/// c1 + lambda * c2
BilinearStructure combine(const BilinearStructure& mu1, const Rational& lambda, const BilinearStructure& mu2);
BilinearStructure scale(const BilinearStructure& mu, const Rational& lambda);
/// (c[i][j][k] - c[j][i][k]) / 2
BilinearStructure antisymmetrize(const BilinearStructure& mu);
/// Structure of mu'(u, v) = p^{-1} mu(p u, p v). Throws SingularMatrix.
BilinearStructure change_basis(const BilinearStructure& mu, const Matrix& p);

/// The two-parameter skew family on the plane: mu(e1,e2) = x0 e1 + y0 e2,
/// mu(e2,e1) = -mu(e1,e2), all other products zero.
BilinearStructure plane_skew_structure(const Rational& x0, const Rational& y0);

} // namespace kvp
