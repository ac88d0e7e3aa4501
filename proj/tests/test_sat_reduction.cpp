#include <doctest.h>

#include <random>

#include "hefcheck/elementary.hpp"
#include "hefcheck/errors.hpp"
#include "hefcheck/printer.hpp"
#include "hefcheck/sat_reduction.hpp"
#include "support/oracles.hpp"

using namespace hefcheck;

namespace {

Cnf3 formula(int vars, std::vector<std::array<int, 3>> clauses) {
    return Cnf3{vars, std::move(clauses)};
}

Cnf3 all_polarity3() {
    Cnf3 f{3, {}};
    for (int s = 0; s < 8; ++s)
        f.clauses.push_back({(s & 4) ? -1 : 1, (s & 2) ? -2 : 2, (s & 1) ? -3 : 3});
    return f;
}

}  // namespace

TEST_CASE("one clause over three variables generates the full golden program") {
    Reduction r = build_reduction(formula(3, {{1, 2, 3}}));
    CHECK(r.program.atom_count() == 10);  // 2m + n + 3
    CHECK(r.program.rule_count() == 16);  // 3n + 4m + 1
    CHECK(render_program(r.program) ==
          "c0 | c2 :- phi.\n"
          "c1 :- c0.\n"
          "c2 :- c1, na1.\n"
          "c2 :- c1, na2.\n"
          "c2 :- c1, na3.\n"
          "a1 :- c2, na1.\n"
          "na1 :- c2, a1.\n"
          "a2 :- a1, na2.\n"
          "a3 :- a2, na3.\n"
          "na2 :- a1, a2.\n"
          "na3 :- a2, a3.\n"
          "a2 :- na1, na2.\n"
          "a3 :- na2, na3.\n"
          "na2 :- a2, na1.\n"
          "na3 :- a3, na2.\n"
          "c0 :- a3, na3.");
}

TEST_CASE("clause literals map to their opposites in literal order") {
    Reduction r = build_reduction(formula(3, {{-2, 1, 3}}));
    // Family 3 sits at rule indices 2..4; bodies pair c1 with the literal
    // opposites a2, na1, na3 in clause order.
    const ReductionAtoms& at = r.atoms;
    CHECK(r.program.rules()[2].pos_body == AtomSet::with(r.program.atom_count(),
                                                         {at.clause_atom(1), at.var_atom(2)}));
    CHECK(r.program.rules()[3].pos_body == AtomSet::with(r.program.atom_count(),
                                                         {at.clause_atom(1), at.nvar_atom(1)}));
    CHECK(r.program.rules()[4].pos_body == AtomSet::with(r.program.atom_count(),
                                                         {at.clause_atom(1), at.nvar_atom(3)}));
}

TEST_CASE("single-variable formulas have no chain-pair rules") {
    // Only constructible with a tautological clause; duplicates are kept.
    Reduction r = build_reduction(formula(1, {{1, -1, 1}}));
    CHECK(r.program.atom_count() == 6);
    CHECK(r.program.rule_count() == 8);
}

TEST_CASE("rule and atom counts hold for random formulas") {
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> vars(3, 5), clauses(1, 6), var_pick(1, 5), coin(0, 1);
    for (int round = 0; round < 50; ++round) {
        int m = vars(rng);
        Cnf3 f{m, {}};
        int n = clauses(rng);
        for (int i = 0; i < n; ++i) {
            int a = 1 + (var_pick(rng) - 1) % m;
            int b = 1 + a % m;
            int c = 1 + b % m;
            f.clauses.push_back({coin(rng) ? a : -a, coin(rng) ? b : -b, coin(rng) ? c : -c});
        }
        Reduction r = build_reduction(f);
        CHECK(r.program.atom_count() == 2 * m + n + 3);
        CHECK(r.program.rule_count() == static_cast<std::size_t>(3 * n + 4 * m + 1));
    }
}

TEST_CASE("assignment enumeration is lexicographic with false before true") {
    SatResult res = sat_bruteforce(formula(3, {{1, 2, 3}}));
    REQUIRE(res.satisfiable);
    CHECK(res.model->values == std::vector<bool>{false, false, true});

    CHECK(!sat_bruteforce(all_polarity3()).satisfiable);

    CHECK_THROWS_AS(sat_bruteforce(formula(30, {{1, 2, 3}}), 24), CapExceededError);
}

TEST_CASE("assignment sets") {
    Reduction r = build_reduction(formula(3, {{1, 2, 3}}));
    Assignment all_true{{true, true, true}};
    CHECK(assignment_set(all_true, r) ==
          r.program.set_of({"c0", "c1", "c2", "a1", "a2", "a3"}));
    Assignment all_false{{false, false, false}};
    CHECK(assignment_set(all_false, r) ==
          r.program.set_of({"c0", "c1", "c2", "na1", "na2", "na3"}));

    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int round = 0; round < 20; ++round) {
        Assignment x{{coin(rng) == 1, coin(rng) == 1, coin(rng) == 1}};
        AtomSet s = assignment_set(x, r);
        for (int i = 1; i <= 3; ++i)
            CHECK(!(s.contains(r.atoms.var_atom(i)) && s.contains(r.atoms.nvar_atom(i))));
    }
}

TEST_CASE("elementary sets through the chain satisfy the polarity and chain constraints") {
    // Properties of sets containing both chain endpoints, checked by
    // enumerating all candidates over a small instance.
    Reduction r = build_reduction(formula(2, {{1, -1, 2}}));
    const Program& p = r.program;
    const int n_atoms = p.atom_count();  // 8 atoms: subsets are enumerable
    AtomSet endpoints = AtomSet::with(n_atoms, {r.atoms.clause_atom(0), r.atoms.clause_atom(2)});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_atoms); ++mask) {
        AtomSet e = AtomSet::from_bits64(n_atoms, mask);
        if (!endpoints.subset_of(e)) continue;
        if (!is_elementary_bruteforce(e, p).elementary) continue;
        for (int i = 1; i <= 2; ++i) {
            bool has_pos = e.contains(r.atoms.var_atom(i));
            bool has_neg = e.contains(r.atoms.nvar_atom(i));
            CHECK(!(has_pos && has_neg));  // never both polarities
            CHECK((has_pos || has_neg));   // at least one of them
        }
        CHECK(e.contains(r.atoms.clause_atom(1)));  // every inner chain atom
    }
}

TEST_CASE("the clause condition is necessary and sufficient for canonical shapes") {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int m : {3, 4}) {
        std::uniform_int_distribution<int> var_pick(1, m);
        for (int round = 0; round < 8; ++round) {
            Cnf3 f{m, {}};
            int n = 1 + round % 3;
            for (int i = 0; i < n; ++i) {
                int a = var_pick(rng);
                int b = 1 + a % m;
                int c = 1 + b % m;
                f.clauses.push_back({coin(rng) ? a : -a, coin(rng) ? b : -b, coin(rng) ? c : -c});
            }
            Reduction r = build_reduction(f);
            for (std::uint64_t shape = 0; shape < (std::uint64_t{1} << m); ++shape) {
                Assignment x;
                for (int v = 1; v <= m; ++v) x.values.push_back((shape >> (v - 1)) & 1);
                AtomSet e = assignment_set(x, r);
                bool expect = true;
                for (const auto& clause : f.clauses) {
                    bool some_opposite_out = false;
                    for (int lit : clause) {
                        if (!e.contains(r.atoms.opposite_atom(lit))) some_opposite_out = true;
                    }
                    if (!some_opposite_out) expect = false;
                }
                REQUIRE(is_elementary_bruteforce(e, r.program).elementary == expect);
            }
        }
    }
}

TEST_CASE("cross validation confirms the pipeline") {
    CrossValidation sat_case = cross_validate(formula(3, {{1, 2, 3}}));
    CHECK(sat_case.verdict == CrossValidation::Verdict::confirmed);
    CHECK(*sat_case.satisfiable);
    CHECK(sat_case.hef_status == HefStatus::not_hef);
    CHECK(*sat_case.model_set_elementary);
    CHECK(*sat_case.certificate_valid);

    CrossValidation tautological = cross_validate(formula(2, {{1, -1, 2}}));
    CHECK(tautological.verdict == CrossValidation::Verdict::confirmed);
    CHECK(*tautological.satisfiable);
    CHECK(tautological.hef_status == HefStatus::not_hef);

    CrossValidation unsat_case = cross_validate(all_polarity3());
    CHECK(unsat_case.verdict == CrossValidation::Verdict::confirmed);
    CHECK(!*unsat_case.satisfiable);
    CHECK(unsat_case.hef_status == HefStatus::hef);

    Limits strangled;
    strangled.time_budget = std::chrono::milliseconds(0);
    CrossValidation inconclusive = cross_validate(all_polarity3(), strangled);
    CHECK(inconclusive.verdict == CrossValidation::Verdict::inconclusive);
}
