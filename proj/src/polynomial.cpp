#include "kvp/polynomial.hpp"

#include <algorithm>

#include "kvp/errors.hpp"

namespace kvp {

Monomial::Monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {
    while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

Monomial Monomial::variable(std::size_t index, std::uint32_t power) {
    std::vector<std::uint32_t> e(index + 1, 0);
    e[index] = power;
    return Monomial(std::move(e));
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::uint32_t> e(std::max(a.exps_.size(), b.exps_.size()), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponent(i) + b.exponent(i);
    return Monomial(std::move(e));
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    const std::size_t n = std::max(a.variable_bound(), b.variable_bound());
    for (std::size_t i = 0; i < n; ++i) {
        const auto ea = a.exponent(i);
        const auto eb = b.exponent(i);
        if (ea != eb) return ea > eb;
    }
    return false;
}

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Rational& coefficient) {
    if (!coefficient.is_zero()) terms_.emplace(m, coefficient);
}

Polynomial Polynomial::variable(std::size_t index) {
    return Polynomial(Monomial::variable(index), Rational(1));
}

std::uint32_t Polynomial::degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Rational Polynomial::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return {};
    const Rational inv = Rational(1) / leading_coefficient();
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * inv);
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        if (m.variable_bound() > point.size())
            throw MalformedInput("polynomial evaluated at a point of too few coordinates");
        Rational t = c;
        for (std::size_t i = 0; i < m.variable_bound(); ++i)
            for (std::uint32_t e = 0; e < m.exponent(i); ++e) t *= point[i];
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.variable_bound() > images.size())
            throw MalformedInput("substitution does not cover every variable");
        Polynomial t(c);
        for (std::size_t i = 0; i < m.variable_bound(); ++i)
            for (std::uint32_t e = 0; e < m.exponent(i); ++e) t *= images[i];
        out += t;
    }
    return out;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

std::string Polynomial::to_string(const VariableNamer& name) const {
    if (terms_.empty()) return "0";
    const auto var = [&](std::size_t i) { return name ? name(i) : "v" + std::to_string(i); };
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const Rational mag = abs(c);
        if (first)
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        first = false;
        std::string body;
        for (std::size_t i = 0; i < m.variable_bound(); ++i) {
            const auto e = m.exponent(i);
            if (e == 0) continue;
            if (!body.empty()) body += "*";
            body += var(i);
            if (e > 1) body += "^" + std::to_string(e);
        }
        if (body.empty())
            s += mag.to_string();
        else if (mag.is_one())
            s += body;
        else
            s += mag.to_string() + "*" + body;
    }
    return s;
}

bool polynomial_less(const Polynomial& a, const Polynomial& b) {
    const GrlexGreater order;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        if (order(ia->first, ib->first)) return true;
        if (order(ib->first, ia->first)) return false;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms().end() && ib != b.terms().end();
}

} // namespace kvp
