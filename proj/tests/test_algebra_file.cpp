#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kvp/algebra_file.hpp"
#include "kvp/sampling.hpp"
#include "support.hpp"

using namespace kvp;

namespace {

ParseError parse_failure(const std::string& text) {
    try {
        parse_algebra(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("no parse error for: " << text);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("parses the documented example", "[file]") {
    const auto mu = parse_algebra("# comment\ndim = 2\nmu(1,2) = 1:1, 2:3/2   # tail\r\nmu(2,1) = 1:-1, 2:-3/2\n");
    CHECK(mu.dim() == 2);
    CHECK(mu(0, 1, 1) == Rational(3, 2));
    CHECK(mu(1, 0, 0) == Rational(-1));
    CHECK(mu(0, 0, 0).is_zero());
}

TEST_CASE("print and parse round trip", "[file][property]") {
    std::mt19937_64 rng(51);
    for (int t = 0; t < 200; ++t) {
        const auto mu = random_structure(rng, 1 + t % 3, 4, 6);
        CHECK(parse_algebra(print_algebra(mu)).constants() == mu.constants());
    }
    CHECK(print_algebra(BilinearStructure(2)) == "dim = 2\n");
    CHECK(print_algebra(testing_support::family(1, -1)) == "dim = 2\nmu(1,2) = 1:1, 2:-1\nmu(2,1) = 1:-1, 2:1\n");
}

TEST_CASE("parse errors carry line and column", "[file]") {
    struct Case {
        std::string text;
        std::size_t line, column;
    };
    for (const auto& c : std::vector<Case>{
             {"dim = 2\nmu(1,3) = 1:1\n", 2, 6},
             {"dim = 2\nmu(1,2) = 3:1\n", 2, 11},
             {"dim = 2\nmu(1,2) = 1:1, 1:2\n", 2, 16},
             {"dim = 2\nmu(1,2) = 1:1/0\n", 2, 13},
             {"mu(1,1) = 1:1\n", 1, 1},
             {"dim = 2\ndim = 2\n", 2, 1},
             {"dim = 0\n", 1, 7},
             {"dim = 2\nnu(1,1) = 1:1\n", 2, 1},
             {"dim = 2 extra\n", 1, 9},
             {"dim = 2\nmu(1,1) = 1:x\n", 2, 13},
             {"# nothing\n", 1, 1},
         }) {
        const ParseError e = parse_failure(c.text);
        CHECK(e.line() == c.line);
        CHECK(e.column() == c.column);
    }
    CHECK_THROWS_AS(read_algebra_file("/nonexistent/file.txt"), MalformedInput);
}
