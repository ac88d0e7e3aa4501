#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hefcheck/dimacs.hpp"
#include "hefcheck/hef.hpp"
#include "hefcheck/limits.hpp"
#include "hefcheck/program.hpp"

namespace hefcheck {

// Atom layout of a generated formula program: one gate atom, a chain atom
// per clause plus the two chain endpoints, and a polar atom pair per
// variable. Names are fixed ("phi", "c0..", "a1..", "na1..") so generated
// programs are diffable.
struct ReductionAtoms {
    int phi = -1;
    std::vector<int> c;   // c[0..n+1]
    std::vector<int> a;   // a[i-1] holds atom a<i>
    std::vector<int> na;  // na[i-1] holds atom na<i>

    int var_atom(int i) const { return a[static_cast<std::size_t>(i - 1)]; }      // 1-based
    int nvar_atom(int i) const { return na[static_cast<std::size_t>(i - 1)]; }    // 1-based
    int clause_atom(int j) const { return c[static_cast<std::size_t>(j)]; }       // 0..n+1
    // Atom for a signed literal; the opposite polarity atom of it.
    int literal_atom(int lit) const { return lit > 0 ? var_atom(lit) : nvar_atom(-lit); }
    int opposite_atom(int lit) const { return lit > 0 ? nvar_atom(lit) : var_atom(-lit); }
};

struct Reduction {
    Program program;
    ReductionAtoms atoms;
};

// Builds the program whose head-elementary-set-freeness is equivalent to
// the unsatisfiability of f. Rule families, in emission order:
//   1.  phi -> c0 | c{n+1}
//   2.  c0 -> c1
//   3.  ci, x -> c{i+1}          for each clause i and each opposite x of
//                                its literals, in literal order
//   4.  c{n+1}, na1 -> a1
//   5.  c{n+1}, a1  -> na1
//   6.  ai,  na{i+1} -> a{i+1}   i in [1, m-1]
//   7.  ai,  a{i+1}  -> na{i+1}  i in [1, m-1]
//   8.  nai, na{i+1} -> a{i+1}   i in [1, m-1]
//   9.  nai, a{i+1}  -> na{i+1}  i in [1, m-1]
//   10. am, nam -> c0
// Rule count is 3n + 4m + 1; atom count is 2m + n + 3.
Reduction build_reduction(const Cnf3& f);

// Truth assignment to variables 1..m; values[i-1] is the value of
// variable i.
struct Assignment {
    std::vector<bool> values;
};

struct SatResult {
    bool satisfiable = false;
    std::optional<Assignment> model;  // lexicographically first, false < true
};

// Exact satisfiability by assignment enumeration; formulas with more than
// var_cap variables raise CapExceededError.
SatResult sat_bruteforce(const Cnf3& f, int var_cap = kDefaultSatVarCap);

// The candidate elementary set induced by an assignment: all chain atoms
// plus, per variable, the polar atom matching its truth value.
AtomSet assignment_set(const Assignment& x, const Reduction& r);

// One formula's equivalence report: satisfiability versus the analyzer's
// verdict on the generated program, with the model-set elementariness and
// certificate checks when applicable.
struct CrossValidation {
    enum class Verdict { confirmed, refuted, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::optional<bool> satisfiable;   // absent when the SAT side hit a cap
    HefStatus hef_status = HefStatus::resource_limit;
    std::optional<bool> model_set_elementary;
    std::optional<bool> certificate_valid;
    std::string note;
};

const char* to_string(CrossValidation::Verdict v);

CrossValidation cross_validate(const Cnf3& f, const Limits& limits = {},
                               int var_cap = kDefaultSatVarCap);

}  // namespace hefcheck
