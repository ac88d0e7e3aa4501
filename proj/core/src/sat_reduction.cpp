#include "hefcheck/sat_reduction.hpp"

#include <string>
#include <vector>

#include "hefcheck/elementary.hpp"
#include "hefcheck/errors.hpp"

namespace hefcheck {

const char* to_string(CrossValidation::Verdict v) {
    switch (v) {
        case CrossValidation::Verdict::confirmed: return "confirmed";
        case CrossValidation::Verdict::refuted: return "refuted";
        case CrossValidation::Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

Reduction build_reduction(const Cnf3& f) {
    const int m = f.num_vars;
    const int n = static_cast<int>(f.clauses.size());

    ReductionAtoms atoms;
    std::vector<std::string> names;
    auto add = [&names](std::string name) {
        names.push_back(std::move(name));
        return static_cast<int>(names.size()) - 1;
    };
    atoms.phi = add("phi");
    for (int j = 0; j <= n + 1; ++j) atoms.c.push_back(add("c" + std::to_string(j)));
    for (int i = 1; i <= m; ++i) atoms.a.push_back(add("a" + std::to_string(i)));
    for (int i = 1; i <= m; ++i) atoms.na.push_back(add("na" + std::to_string(i)));
    const int cap = static_cast<int>(names.size());

    std::vector<Rule> rules;
    auto rule = [&](std::initializer_list<int> head, std::initializer_list<int> body) {
        Rule r{AtomSet(cap), AtomSet(cap), AtomSet(cap)};
        for (int id : head) r.head.insert(id);
        for (int id : body) r.pos_body.insert(id);
        rules.push_back(std::move(r));
    };

    // Family 1: the only disjunctive rule, gating the two chain endpoints.
    rule({atoms.clause_atom(0), atoms.clause_atom(n + 1)}, {atoms.phi});
    // Family 2: chain start.
    rule({atoms.clause_atom(1)}, {atoms.clause_atom(0)});
    // Family 3: one chain step per clause literal, via the literal's
    // opposite atom, in literal order. Duplicates are kept.
    for (int i = 1; i <= n; ++i) {
        for (int lit : f.clauses[static_cast<std::size_t>(i - 1)]) {
            rule({atoms.clause_atom(i + 1)}, {atoms.clause_atom(i), atoms.opposite_atom(lit)});
        }
    }
    // Families 4, 5: chain end feeds the first variable pair.
    rule({atoms.var_atom(1)}, {atoms.clause_atom(n + 1), atoms.nvar_atom(1)});
    rule({atoms.nvar_atom(1)}, {atoms.clause_atom(n + 1), atoms.var_atom(1)});
    // Families 6-9: steps between consecutive variable pairs.
    for (int i = 1; i < m; ++i)
        rule({atoms.var_atom(i + 1)}, {atoms.var_atom(i), atoms.nvar_atom(i + 1)});
    for (int i = 1; i < m; ++i)
        rule({atoms.nvar_atom(i + 1)}, {atoms.var_atom(i), atoms.var_atom(i + 1)});
    for (int i = 1; i < m; ++i)
        rule({atoms.var_atom(i + 1)}, {atoms.nvar_atom(i), atoms.nvar_atom(i + 1)});
    for (int i = 1; i < m; ++i)
        rule({atoms.nvar_atom(i + 1)}, {atoms.nvar_atom(i), atoms.var_atom(i + 1)});
    // Family 10: the last pair closes the cycle.
    rule({atoms.clause_atom(0)}, {atoms.var_atom(m), atoms.nvar_atom(m)});

    return {Program::from_parts(std::move(names), std::move(rules)), std::move(atoms)};
}

SatResult sat_bruteforce(const Cnf3& f, int var_cap) {
    const int m = f.num_vars;
    if (m > var_cap)
        throw CapExceededError("formula has " + std::to_string(m) + " variables, cap is " +
                               std::to_string(var_cap));
    if (m > 62) throw CapExceededError("assignment enumeration supports at most 62 variables");
    // Lexicographic order with variable 1 most significant, false < true.
    const std::uint64_t end = std::uint64_t{1} << m;
    for (std::uint64_t k = 0; k < end; ++k) {
        auto value = [&](int var) { return ((k >> (m - var)) & 1) != 0; };
        bool sat = true;
        for (const auto& clause : f.clauses) {
            bool clause_sat = false;
            for (int lit : clause) {
                if (lit > 0 ? value(lit) : !value(-lit)) {
                    clause_sat = true;
                    break;
                }
            }
            if (!clause_sat) {
                sat = false;
                break;
            }
        }
        if (sat) {
            Assignment model;
            model.values.resize(static_cast<std::size_t>(m));
            for (int v = 1; v <= m; ++v) model.values[static_cast<std::size_t>(v - 1)] = value(v);
            return {true, std::move(model)};
        }
    }
    return {false, std::nullopt};
}

AtomSet assignment_set(const Assignment& x, const Reduction& r) {
    AtomSet s(r.program.atom_count());
    for (int id : r.atoms.c) s.insert(id);
    for (std::size_t i = 0; i < x.values.size(); ++i) {
        s.insert(x.values[i] ? r.atoms.a[i] : r.atoms.na[i]);
    }
    return s;
}

CrossValidation cross_validate(const Cnf3& f, const Limits& limits, int var_cap) {
    CrossValidation cv;
    Reduction reduction = build_reduction(f);

    SatResult sat;
    bool sat_known = true;
    try {
        sat = sat_bruteforce(f, var_cap);
        cv.satisfiable = sat.satisfiable;
    } catch (const CapExceededError& ex) {
        sat_known = false;
        cv.note = std::string("satisfiability undecided: ") + ex.what();
    }

    HefVerdict hv = is_hef(reduction.program, limits);
    cv.hef_status = hv.status;

    if (!sat_known || hv.status == HefStatus::resource_limit) {
        cv.verdict = CrossValidation::Verdict::inconclusive;
        if (cv.note.empty()) cv.note = "analysis hit a resource limit";
        return cv;
    }

    bool equivalent = sat.satisfiable == (hv.status == HefStatus::not_hef);
    cv.verdict = equivalent ? CrossValidation::Verdict::confirmed : CrossValidation::Verdict::refuted;
    if (!equivalent) {
        cv.note = "satisfiability and the analyzer verdict disagree";
        return cv;
    }

    if (sat.satisfiable) {
        AtomSet e = assignment_set(*sat.model, reduction);
        try {
            cv.model_set_elementary =
                is_elementary_bruteforce(e, reduction.program, limits.subset_cap).elementary;
        } catch (const CapExceededError& ex) {
            cv.verdict = CrossValidation::Verdict::inconclusive;
            cv.note = std::string("model set check undecided: ") + ex.what();
            return cv;
        }
        if (!*cv.model_set_elementary) {
            cv.verdict = CrossValidation::Verdict::refuted;
            cv.note = "assignment set is not elementary";
            return cv;
        }
    }
    if (hv.status == HefStatus::not_hef) {
        CheckResult cr = verify_certificate(reduction.program, *hv.certificate);
        cv.certificate_valid = cr.ok;
        if (!cr.ok) {
            cv.verdict = CrossValidation::Verdict::refuted;
            cv.note = "certificate failed verification: " + cr.reason;
        }
    }
    return cv;
}

}  // namespace hefcheck
