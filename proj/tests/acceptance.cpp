// Acceptance battery: one PASS/FAIL line per criterion. Every library result
// is compared against an independent computation from oracle.hpp or a hand
// expansion. Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kvp/ce_cohomology.hpp"
#include "kvp/classify.hpp"
#include "kvp/exactla.hpp"
#include "kvp/kv_cohomology.hpp"
#include "kvp/sampling.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace kvp;
using testing_support::family;
using testing_support::to_rows;
using testing_support::to_table;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string betti_text(const std::vector<long>& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
    return s + ")";
}

const std::uint64_t seed = 20241015;

// 1. ce betti (0,0,0) on four nonzero family members.
Outcome nonzero_table() {
    Outcome o;
    for (auto [x, y] : {std::pair{1L, 0L}, {0L, 1L}, {2L, 3L}, {0L, 5L}}) {
        const auto mu = family(x, y);
        const auto lib = ce_complex_report(mu, 2).betti();
        const auto ref = oracle::ce_betti(to_table(mu), 2);
        const std::string at = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        o.require(lib == std::vector<long>{0, 0, 0}, at + " library " + betti_text(lib));
        o.require(ref == lib, at + " oracle " + betti_text(ref));
    }
    return o;
}

// 2. zero structure gives (2,4,2).
Outcome zero_table() {
    Outcome o;
    const auto mu = family(0, 0);
    const auto lib = ce_complex_report(mu, 2).betti();
    o.require(lib == std::vector<long>{2, 4, 2}, "library " + betti_text(lib));
    o.require(oracle::ce_betti(to_table(mu), 2) == lib, "oracle disagrees");
    return o;
}

Vector unit_endo(std::size_t i, std::size_t j) {  // e_j -> e_i, 1-based
    Vector v(4);
    v[(j - 1) * 2 + (i - 1)] = Rational(1);
    return v;
}

// 3. degree-1 cocycle spaces.
Outcome cocycles() {
    Outcome o;
    for (auto [x, expected] :
         {std::pair{1L, std::vector<Vector>{unit_endo(1, 1), unit_endo(1, 2)}},
          {0L, std::vector<Vector>{unit_endo(1, 1), unit_endo(1, 2), unit_endo(2, 1), unit_endo(2, 2)}}}) {
        const auto mu = family(x, 0);
        std::vector<Vector> basis;
        for (const auto& c : ce_cocycle_basis(mu, 1)) basis.push_back(c.coefficients);
        o.require(subspace_equal(basis, expected), "x0=" + std::to_string(x) + " span mismatch");
        // Oracle: every expected vector is killed by the independent delta^1.
        const auto d1 = oracle::ce_delta(to_table(mu), 1);
        for (const auto& v : expected) {
            oracle::Rows col(v.size(), oracle::Vec(1));
            for (std::size_t r = 0; r < v.size(); ++r) col[r][0] = v[r].raw();
            const auto image = oracle::multiply(d1, col);
            bool zero = true;
            for (const auto& row : image) zero = zero && row[0] == 0;
            o.require(zero, "oracle: expected vector is not a cocycle");
        }
        o.require(oracle::rank(d1) == 4 - expected.size(), "oracle kernel dimension");
    }
    return o;
}

// 4. skew + nilpotent system on the plane family.
Outcome constraint_system_check() {
    Outcome o;
    const VarietyReport v = dim2_skew_solve({Axiom::skew, Axiom::nilpotent});
    const Polynomial x = Polynomial::variable(0), y = Polynomial::variable(1);
    // Hand expansion, mu(e1,e2) = x e1 + y e2:
    //   e1 (e1 e2) = y (x e1 + y e2)     -> x*y, y^2
    //   e2 (e1 e2) = -x (x e1 + y e2)    -> x^2, x*y
    // Skewness holds identically on the family; e_i(e_i e_i) = 0.
    const std::vector<Polynomial> hand{x * y, y * y, x * x};
    for (const auto& p : {x * x, x * y, x * y - x * x, y * y})
        o.require(polynomial_span_contains(v.reduced_system, p), "missing " + p.to_string());
    for (const auto& p : v.reduced_system)
        o.require(polynomial_span_contains(hand, p), "unexpected " + p.to_string());
    o.require(!v.flags.empty(), "no discrepancy flag against F");
    o.require(v.variety == MonomialVariety{2, {{{0, 1}}}}, "variety is not the origin");
    return o;
}

// 5. grid scan vs exact variety; pencil closure.
Outcome oracle_agreement() {
    Outcome o;
    const AxiomSet axioms{Axiom::kv_poisson, Axiom::kv};
    const auto scanned = grid_scan(2, 2, 2, axioms);
    const VarietyReport v = dim2_skew_solve(axioms);
    // Brute force over the half-integer grid with the oracle identities.
    std::size_t oracle_hits = 0, variety_hits = 0;
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            const std::vector<Rational> p{Rational(a, 2), Rational(b, 2)};
            const auto t = to_table(plane_skew_structure(p[0], p[1]));
            const bool ok = oracle::skew(t) && oracle::nilpotent_holds(t) && oracle::kv_holds(t);
            oracle_hits += ok;
            variety_hits += v.variety.contains(p);
            o.require(ok == v.variety.contains(p), "variety and oracle disagree at a grid point");
        }
    o.require(scanned.size() == 1 && oracle_hits == 1 && variety_hits == 1,
              "solution counts scan " + std::to_string(scanned.size()) + ", oracle " + std::to_string(oracle_hits));
    if (!scanned.empty()) {
        bool zero = true;
        for (const auto& c : scanned[0].constants()) zero = zero && c.is_zero();
        o.require(zero, "the surviving structure is not zero");
    }
    const PencilReport pencil = pencil_closure_check(scanned, axioms, 200, seed);
    o.require(pencil.closed(), std::to_string(pencil.failures) + " pencil failures");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(scanned.size()) + " solution, pencil " +
                std::to_string(pencil.trials) + " trials";
    return o;
}

// 6. square-zero gates.
Outcome square_zero() {
    Outcome o;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < 200; ++t) {
        const auto mu = random_skew_structure(rng, 2, 5, 5);
        for (std::size_t q = 0; q < 2; ++q) {
            o.require(ce_square_zero_check(mu, q).holds, "ce delta^2 != 0");
            const auto composite = oracle::multiply(oracle::ce_delta(to_table(mu), q + 1),
                                                    oracle::ce_delta(to_table(mu), q));
            o.require(oracle::rank(composite) == 0, "oracle ce delta^2 != 0");
        }
    }
    // KV: the library scan must find exactly the structures the oracle accepts.
    const auto kv_structures = grid_scan(2, 1, 1, {Axiom::kv}, false);
    std::size_t oracle_count = 0;
    {
        std::vector<int> digits(8, -1);
        for (;;) {
            oracle::Table t(2);
            for (std::size_t i = 0; i < 8; ++i) t.c[i] = digits[i];
            oracle_count += oracle::kv_holds(t);
            std::size_t d = 0;
            while (d < 8 && digits[d] == 1) digits[d++] = -1;
            if (d == 8) break;
            ++digits[d];
        }
    }
    o.require(kv_structures.size() == oracle_count, "kv scan " + std::to_string(kv_structures.size()) +
                                                        " vs oracle " + std::to_string(oracle_count));
    for (const auto& mu : kv_structures) {
        for (std::size_t q = 0; q + 1 < kv_max_degree; ++q) o.require(kv_square_zero_check(mu, q).holds, "kv gate");
        // Oracle: the linearised anomaly kills every coboundary -(a f(b) + f(a) b - f(ab)).
        const auto t = to_table(mu);
        o.require(oracle::rank(oracle::multiply(oracle::kv_anomaly_derivative(t), oracle::kv_delta1(t))) == 0,
                  "oracle kv delta^2 delta^1 != 0");
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(kv_structures.size()) + " kv structures gated";
    return o;
}

std::pair<std::vector<long>, std::vector<long>> tables(const BilinearStructure& mu) {
    std::vector<long> kv;
    try {
        kv = kv_complex_report(mu, kv_max_degree).betti();
    } catch (const ComplexRefused&) {
    }
    return {ce_complex_report(mu, 2).betti(), kv};
}

// 7. invariance under basis change and scaling.
Outcome invariance() {
    Outcome o;
    std::mt19937_64 rng(seed + 7);
    for (auto [x, y] : {std::pair{1L, 0L}, {0L, 1L}, {2L, 3L}, {0L, 5L}, {0L, 0L}}) {
        const auto mu = family(x, y);
        const auto reference = tables(mu);
        for (int t = 0; t < 50; ++t) {
            const Matrix p = random_invertible_matrix(rng, 2);
            const auto moved = change_basis(mu, p);
            o.require(tables(moved) == reference, "basis change altered betti numbers");
            // Oracle: the moved structure is isomorphic, so its oracle ce betti match.
            o.require(oracle::ce_betti(to_table(moved), 2) == reference.first, "oracle ce betti after basis change");
        }
        for (const Rational& lambda : {Rational(1, 2), Rational(-3), Rational(7)})
            o.require(tables(scale(mu, lambda)) == reference, "scaling altered betti numbers");
    }
    return o;
}

// 8. implications and scaling invariance on random structures.
Outcome properties() {
    Outcome o;
    std::mt19937_64 rng(seed + 8);
    for (int t = 0; t < 1000; ++t) {
        const auto mu = (t % 2 == 0) ? random_skew_structure(rng, 2, 5, 5) : random_structure(rng, 2, 5, 5);
        const AuditReport a = axiom_audit(mu);
        const auto tab = to_table(mu);
        o.require(a.passes(Axiom::skew) == oracle::skew(tab), "skew verdict vs oracle");
        o.require(a.passes(Axiom::kv) == oracle::kv_holds(tab), "kv verdict vs oracle");
        o.require(a.passes(Axiom::nilpotent) == oracle::nilpotent_holds(tab), "nilpotent verdict vs oracle");
        o.require(a.passes(Axiom::jacobi) == oracle::jacobi_holds(tab), "jacobi verdict vs oracle");
        if (a.passes(Axiom::skew) && a.passes(Axiom::nilpotent)) o.require(a.passes(Axiom::kv), "skew+nil => kv");
        if (a.passes(Axiom::skew) && a.passes(Axiom::kv)) o.require(a.passes(Axiom::nilpotent), "skew+kv => nil");
        if (a.passes(Axiom::skew)) o.require(a.passes(Axiom::jacobi), "skew dim 2 => jacobi");
        Rational lambda;
        while (lambda.is_zero()) lambda = random_rational(rng, 5, 5);
        const AuditReport s = axiom_audit(scale(mu, lambda));
        for (auto ax : all_axioms) o.require(s.passes(ax) == a.passes(ax), "scaling changed a verdict");
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<Outcome()> run;
        double limit_ms;  // 0: no runtime bound
    };
    const std::vector<Criterion> criteria{
        {"1 ce betti (0,0,0) for (1,0),(0,1),(2,3),(0,5)", nonzero_table, 1000},
        {"2 ce betti (2,4,2) for (0,0)", zero_table, 1000},
        {"3 degree-1 cocycle spaces for (1,0) and (0,0)", cocycles, 0},
        {"4 skew+nilpotent system contains x^2, xy, y^2; F flagged", constraint_system_check, 0},
        {"5 grid scan agrees with exact variety; pencil closed", oracle_agreement, 10000},
        {"6 ce and kv square-zero gates", square_zero, 30000},
        {"7 betti invariance under basis change and scaling", invariance, 30000},
        {"8 axiom implications and scaling invariance", properties, 10000},
    };
    int failed = 0;
    for (const auto& [name, run, limit_ms] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (limit_ms > 0 && ms > limit_ms) o.require(false, "runtime over " + std::to_string(limit_ms / 1000) + " s");
        std::printf("[%s] criterion %s (%.0f ms)%s%s\n", o.pass ? "PASS" : "FAIL", name.c_str(), ms,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
