#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kvp/algebra.hpp"
#include "kvp/errors.hpp"
#include "kvp/exactla.hpp"
#include "kvp/sampling.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kvp;
using testing_support::family;
using testing_support::to_table;

TEST_CASE("axiom names", "[algebra]") {
    for (auto a : all_axioms) CHECK(parse_axiom(axiom_name(a)) == a);
    CHECK(parse_axiom("kv_poisson") == Axiom::kv_poisson);
    CHECK_FALSE(parse_axiom("lie").has_value());
    CHECK(parse_axiom_list("skew,nilpotent") == AxiomSet{Axiom::skew, Axiom::nilpotent});
    CHECK_THROWS_AS(parse_axiom_list("skew,bogus"), MalformedInput);
    CHECK(to_string(AxiomSet{Axiom::nilpotent, Axiom::skew}) == "skew,nilpotent");
}

TEST_CASE("zero structure passes everything", "[algebra]") {
    const AuditReport a = axiom_audit(BilinearStructure(3));
    for (auto ax : all_axioms) CHECK(a.passes(ax));
}

TEST_CASE("family (1,0) audit and witnesses", "[algebra]") {
    const AuditReport a = axiom_audit(family(1, 0));
    CHECK(a.passes(Axiom::skew));
    CHECK(a.passes(Axiom::jacobi));
    CHECK_FALSE(a.passes(Axiom::kv));
    CHECK_FALSE(a.passes(Axiom::nilpotent));
    CHECK_FALSE(a.passes(Axiom::kv_poisson));
    // e2(e1 e2) = e2 e1 = -e1 is the first failing nilpotency tuple (w, u, v).
    REQUIRE(a[Axiom::nilpotent].witness);
    CHECK(a[Axiom::nilpotent].witness->indices == std::vector<std::size_t>{2, 1, 2});
    CHECK(a[Axiom::nilpotent].witness->residual == Vector{Rational(-1), Rational(0)});
    // Oracle: the reported residual is the identity evaluated at the witness.
    const auto t = to_table(family(1, 0));
    const auto& w = a[Axiom::kv].witness->indices;
    const auto r = oracle::kv(t, oracle::unit(2, w[0] - 1), oracle::unit(2, w[1] - 1), oracle::unit(2, w[2] - 1));
    for (std::size_t k = 0; k < 2; ++k) CHECK(a[Axiom::kv].witness->residual[k].raw() == r[k]);
}

TEST_CASE("witness is the lexicographically first failing tuple", "[algebra]") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const auto mu = random_structure(rng, 2, 2, 1);
        const auto tab = to_table(mu);
        const Verdict v = check_axiom(mu, Axiom::jacobi);
        std::optional<std::vector<std::size_t>> first;
        for (std::size_t a = 0; a < 2 && !first; ++a)
            for (std::size_t b = 0; b < 2 && !first; ++b)
                for (std::size_t c = 0; c < 2 && !first; ++c)
                    if (!oracle::is_zero(oracle::jacobi(tab, oracle::unit(2, a), oracle::unit(2, b), oracle::unit(2, c))))
                        first = std::vector<std::size_t>{a + 1, b + 1, c + 1};
        CHECK(v.pass == !first.has_value());
        if (first) CHECK(v.witness->indices == *first);
    }
}

TEST_CASE("audit agrees with the oracle identities", "[algebra][property]") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 400; ++t) {
        const std::size_t n = 1 + t % 3;
        const auto mu = (t % 3 == 0) ? random_skew_structure(rng, n, 2, 2) : random_structure(rng, n, 1, 1);
        const auto tab = to_table(mu);
        const AuditReport a = axiom_audit(mu);
        CHECK(a.passes(Axiom::symmetric) == oracle::symmetric(tab));
        CHECK(a.passes(Axiom::skew) == oracle::skew(tab));
        CHECK(a.passes(Axiom::kv) == oracle::kv_holds(tab));
        CHECK(a.passes(Axiom::jacobi) == oracle::jacobi_holds(tab));
        CHECK(a.passes(Axiom::leibniz_self) == oracle::leibniz_holds(tab));
        CHECK(a.passes(Axiom::nilpotent) == oracle::nilpotent_holds(tab));
        CHECK(a.passes(Axiom::kv_poisson) == (oracle::skew(tab) && oracle::nilpotent_holds(tab)));
    }
}

TEST_CASE("verdicts invariant under basis change and scaling", "[algebra][property]") {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        const auto mu = (t % 2) ? random_skew_structure(rng, 2, 3, 2) : random_structure(rng, 2, 1, 1);
        const AuditReport a = axiom_audit(mu);
        const AuditReport moved = axiom_audit(change_basis(mu, random_invertible_matrix(rng, 2)));
        const AuditReport scaled = axiom_audit(scale(mu, Rational(-5, 3)));
        for (auto ax : all_axioms) {
            CHECK(moved.passes(ax) == a.passes(ax));
            CHECK(scaled.passes(ax) == a.passes(ax));
        }
    }
}

TEST_CASE("change of basis round trip", "[algebra]") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const auto mu = random_structure(rng, 3, 3, 3);
        const Matrix p = random_invertible_matrix(rng, 3);
        CHECK(change_basis(change_basis(mu, p), inverse(p)).constants() == mu.constants());
    }
    CHECK_THROWS_AS(change_basis(family(1, 0), Matrix(2, 2)), SingularMatrix);
    CHECK_THROWS_AS(change_basis(family(1, 0), Matrix::identity(3)), MalformedInput);
}

TEST_CASE("antisymmetrize is an idempotent projection onto skew structures", "[algebra][property]") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 100; ++t) {
        const auto mu = random_structure(rng, 3, 3, 2);
        const auto a = antisymmetrize(mu);
        CHECK(check_axiom(a, Axiom::skew).pass);
        CHECK(antisymmetrize(a).constants() == a.constants());
    }
}

TEST_CASE("product evaluation and combinations", "[algebra]") {
    const auto mu = family(2, 3);
    const Vector u{Rational(1), Rational(1)}, v{Rational(0), Rational(1)};
    CHECK(evaluate(mu, u, v) == Vector{Rational(2), Rational(3)});
    const auto c = combine(family(1, 0), Rational(2), family(0, 1));
    CHECK(c.constants() == family(1, 2).constants());
    CHECK_THROWS_AS(combine(family(1, 0), Rational(1), BilinearStructure(3)), MalformedInput);
    CHECK_THROWS_AS(BilinearStructure(0), MalformedInput);
}

TEST_CASE("dimension two skew structures satisfy jacobi", "[algebra][property]") {
    std::mt19937_64 rng(15);
    for (int t = 0; t < 300; ++t) CHECK(check_axiom(random_skew_structure(rng, 2, 5, 5), Axiom::jacobi).pass);
}
