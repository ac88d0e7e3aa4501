#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace hefcheck {

// A 3-CNF formula: clauses of exactly three literals (signed 1-based
// variable indices) over variables 1..num_vars.
struct Cnf3 {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

// Standard DIMACS "p cnf <vars> <clauses>" input. Clauses are terminated
// by 0 and may span lines; 'c' lines are comments. Clauses whose literal
// count differs from three, or that repeat a literal, raise
// NotThreeCnfError; everything else malformed raises ParseError with a
// span. A clause may contain a variable in both polarities.
Cnf3 parse_dimacs(std::string_view text);

std::string render_dimacs(const Cnf3& f);

}  // namespace hefcheck
