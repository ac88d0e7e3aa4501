#include <doctest.h>

#include "hefcheck/dimacs.hpp"
#include "hefcheck/errors.hpp"
#include "hefcheck/sat_reduction.hpp"

using namespace hefcheck;

namespace {

// All eight sign patterns over three variables; unsatisfiable as a whole.
std::string all_polarity_cnf() {
    std::string text = "p cnf 3 8\n";
    for (int s = 0; s < 8; ++s) {
        text += std::to_string((s & 4) ? -1 : 1) + " " + std::to_string((s & 2) ? -2 : 2) + " " +
                std::to_string((s & 1) ? -3 : 3) + " 0\n";
    }
    return text;
}

}  // namespace

TEST_CASE("single clause") {
    Cnf3 f = parse_dimacs("p cnf 3 1\n1 2 3 0");
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("clauses must have exactly three literals") {
    try {
        parse_dimacs("p cnf 2 1\n1 -2 0");
        FAIL("expected NotThreeCnfError");
    } catch (const NotThreeCnfError& ex) {
        CHECK(ex.clause_index() == 0);
    }
    CHECK_THROWS_AS(parse_dimacs("p cnf 4 1\n1 2 3 4 0"), NotThreeCnfError);
}

TEST_CASE("duplicate literals are rejected, opposite polarities are not") {
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 1 2 0"), NotThreeCnfError);
    Cnf3 f = parse_dimacs("p cnf 2 1\n1 -1 2 0");  // tautological clause is fine
    CHECK(f.clauses[0] == std::array<int, 3>{1, -1, 2});
}

TEST_CASE("the all-polarity file over three variables parses and is unsatisfiable") {
    Cnf3 f = parse_dimacs(all_polarity_cnf());
    CHECK(f.num_vars == 3);
    CHECK(f.clauses.size() == 8);
    CHECK(!sat_bruteforce(f).satisfiable);
}

TEST_CASE("malformed inputs carry spans or precise errors") {
    CHECK_THROWS_AS(parse_dimacs(""), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p dnf 3 1\n1 2 3 0"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 0\n"), ParseError);                // no clauses
    CHECK_THROWS_AS(parse_dimacs("p cnf 0 1\n1 2 3 0"), ParseError);        // no variables
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 4 0"), ParseError);        // literal out of range
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 2\n1 2 3 0"), ParseError);        // missing clause
    CHECK_THROWS_AS(parse_dimacs("p cnf 3 1\n1 2 3 0\n1 2 3 0"), ParseError);  // extra clause
    try {
        parse_dimacs("p cnf 3 1\nx 2 3 0");
        FAIL("expected ParseError");
    } catch (const ParseError& ex) {
        CHECK(ex.span().line == 2);
        CHECK(ex.span().column == 1);
    }
}

TEST_CASE("comments and flexible whitespace") {
    Cnf3 f = parse_dimacs("c comment\np cnf 3 2\n1 2\n3 0 -1\nc mid comment\n-2 -3 0\n");
    CHECK(f.clauses.size() == 2);
    CHECK(f.clauses[1] == std::array<int, 3>{-1, -2, -3});
}

TEST_CASE("render round trip") {
    Cnf3 f = parse_dimacs(all_polarity_cnf());
    Cnf3 back = parse_dimacs(render_dimacs(f));
    CHECK(back.num_vars == f.num_vars);
    CHECK(back.clauses == f.clauses);
}
