#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kvp {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Backed by GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}                    // NOLINT
    Rational(int value) : value_(static_cast<long>(value)) {} // NOLINT
    Rational(long numerator, long denominator);
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(const mpq_class& value);

    /// Parses `p`, `-p`, `+p` or `p/q`. Throws std::invalid_argument on
    /// malformed text and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// `p/q` in lowest terms; integers are printed without `/1`.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

} // namespace kvp
