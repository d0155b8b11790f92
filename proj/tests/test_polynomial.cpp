#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "kvp/polynomial.hpp"

using namespace kvp;

namespace {
const Polynomial x = Polynomial::variable(0);
const Polynomial y = Polynomial::variable(1);
std::string xy_names(std::size_t i) { return i == 0 ? "x" : i == 1 ? "y" : "z"; }
} // namespace

TEST_CASE("canonical printing in grlex order", "[polynomial]") {
    const Polynomial p = y * y + Rational(3) - Rational(1, 2) * x * y + x * x;
    CHECK(p.to_string(xy_names) == "x^2 - 1/2*x*y + y^2 + 3");
    CHECK(Polynomial().to_string() == "0");
    CHECK((-x).to_string(xy_names) == "-x");
    CHECK(x.to_string() == "v0");
}

TEST_CASE("arithmetic and cancellation", "[polynomial]") {
    CHECK(((x + y) * (x - y)) == x * x - y * y);
    CHECK((x - x).is_zero());
    CHECK((x * y).degree() == 2);
    CHECK((x * y).is_term());
    CHECK_FALSE((x + y).is_term());
}

TEST_CASE("monic normalization", "[polynomial]") {
    const Polynomial p = Rational(-2) * x * x + Rational(4) * y;
    CHECK(p.leading_coefficient() == Rational(-2));
    CHECK(p.monic() == x * x - Rational(2) * y);
    CHECK(Polynomial().monic().is_zero());
}

TEST_CASE("evaluation and substitution", "[polynomial]") {
    const Polynomial p = x * x * y - Rational(3) * y + Rational(1);
    const std::vector<Rational> pt{Rational(2), Rational(1, 3)};
    CHECK(p.evaluate(pt) == Rational(4, 3));
    const std::vector<Polynomial> images{y + Rational(1), Rational(2) * x};
    CHECK(p.substitute(images) == (y + Rational(1)) * (y + Rational(1)) * Rational(2) * x - Rational(6) * x +
                                      Rational(1));
    CHECK_THROWS(p.evaluate(std::vector<Rational>{Rational(1)}));
}

TEST_CASE("total order used for deduplication", "[polynomial]") {
    CHECK(polynomial_less(x, x + Rational(1)) != polynomial_less(x + Rational(1), x));
    CHECK_FALSE(polynomial_less(x, x));
}
