#include <doctest.h>

#include <random>

#include "hefcheck/elementary.hpp"
#include "hefcheck/errors.hpp"
#include "hefcheck/printer.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

using namespace hefcheck;
using namespace testsupport;

namespace {

Program without_rule(const Program& p, std::size_t drop) {
    std::vector<Rule> rules;
    for (std::size_t i = 0; i < p.rule_count(); ++i)
        if (i != drop) rules.push_back(p.rules()[i]);
    return Program::from_parts(p.atom_names(), std::move(rules));
}

}  // namespace

TEST_CASE("outbound evidence points at the first witnessing rule") {
    Program pex = parse(kNotHefExample);
    OutboundEvidence ev = is_outbound(set_of(pex, {"a", "b"}), set_of(pex, {"a", "b", "c"}), pex);
    REQUIRE(ev.outbound());
    CHECK(*ev.rule_index == 1);
    CHECK(render_rule(pex, pex.rules()[1]) == "b :- c.");

    Program pw = parse(kWitnessExample);
    AtomSet all = pw.all_atoms();
    AtomSet sub = set_of(pw, {"b", "c", "e", "f"});
    CHECK(!is_outbound(sub, all, without_rule(pw, 0)).outbound());
    OutboundEvidence full = is_outbound(sub, all, pw);
    REQUIRE(full.outbound());
    CHECK(*full.rule_index == 0);
}

TEST_CASE("outbound preconditions") {
    Program p = parse(kNotHefExample);
    AtomSet y = set_of(p, {"a", "b"});
    CHECK_THROWS_AS(is_outbound(p.empty_set(), y, p), BadSubsetError);
    CHECK_THROWS_AS(is_outbound(y, y, p), BadSubsetError);
    CHECK_THROWS_AS(is_outbound(set_of(p, {"c"}), y, p), BadSubsetError);
}

TEST_CASE("both outbound formulations agree") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 500; ++round) {
        Program p = random_program(rng, 5, 6, {.allow_negation = false});
        std::uniform_int_distribution<std::uint64_t> mask(0, 31);
        std::uint64_t ybits = mask(rng);
        std::uint64_t zbits = ybits & mask(rng);
        if (zbits == 0 || zbits == ybits) continue;
        AtomSet y = AtomSet::from_bits64(5, ybits);
        AtomSet z = AtomSet::from_bits64(5, zbits);
        OutboundEvidence direct = is_outbound(z, y, p);
        OutboundEvidence projected = is_outbound_projected(z, y, p);
        REQUIRE(direct.outbound() == projected.outbound());
        if (direct.outbound()) REQUIRE(*direct.rule_index == *projected.rule_index);
    }
}

TEST_CASE("elementary sets of the golden programs") {
    Program pex = parse(kNotHefExample);
    CHECK(is_elementary_bruteforce(set_of(pex, {"a", "b", "c"}), pex).elementary);
    CHECK(is_elementary_bruteforce(set_of(pex, {"a"}), pex).elementary);

    Program pw = parse(kWitnessExample);
    CHECK(is_elementary_bruteforce(pw.all_atoms(), pw).elementary);
    ElementaryVerdict v = is_elementary_bruteforce(pw.all_atoms(), without_rule(pw, 0));
    REQUIRE(!v.elementary);
    CHECK(*v.failing_subset == set_of(pw, {"b", "c", "e", "f"}));
}

TEST_CASE("the failing subset is the canonical first one") {
    // {a} fails before {d} because a has the smaller id.
    Program p = parse(kNotHefExample);
    ElementaryVerdict v = is_elementary_bruteforce(set_of(p, {"a", "d"}), p);
    REQUIRE(!v.elementary);
    CHECK(*v.failing_subset == set_of(p, {"a"}));
}

TEST_CASE("brute force cap") {
    std::vector<RawRule> rules;
    for (int i = 0; i < 21; ++i) rules.push_back(RawRule{{"x" + std::to_string(i)}, {}, {}});
    Program p = Program::intern(rules);
    CHECK_THROWS_AS(is_elementary_bruteforce(p.all_atoms(), p, 20), CapExceededError);
}

TEST_CASE("polynomial check on the published witness") {
    Program pw = parse(kWitnessExample);
    Program wit = project(pw, set_of(pw, {"b", "c", "e", "f"}));
    CHECK(is_elementary_poly(wit.all_atoms(), wit));
    CHECK(is_elementary_poly(set_of(wit, {"b"}), wit));
    CHECK_THROWS_AS(is_elementary_poly(pw.all_atoms(), pw), DisjunctiveInputError);
}

TEST_CASE("polynomial check distinguishes strong connectivity from elementariness") {
    // The dependency graph is strongly connected but {a, b} is not outbound.
    Program p = parse("a :- b, c.\nb :- a.\nc :- a.");
    CHECK(!is_elementary_poly(p.all_atoms(), p));
    ElementaryVerdict v = is_elementary_bruteforce(p.all_atoms(), p);
    CHECK(!v.elementary);
}

TEST_CASE("oracle equivalence, exhaustive at three atoms") {
    auto pool = nondisjunctive_rule_pool(3);
    int checked = 0;
    for_each_pool_program(pool, 3, 3, [&](const Program& p) {
        for (std::uint64_t y = 1; y < 8; ++y) {
            AtomSet ys = AtomSet::from_bits64(3, y);
            bool brute = is_elementary_bruteforce(ys, p).elementary;
            bool poly = is_elementary_poly(ys, p);
            REQUIRE(brute == poly);
            ++checked;
        }
    });
    CHECK(checked > 1000);
}

TEST_CASE("oracle equivalence on random medium programs") {
    std::mt19937_64 rng(29);
    for (int round = 0; round < 200; ++round) {
        Program p = random_program(rng, 6, 8, {.allow_negation = false, .nondisjunctive = true});
        for (std::uint64_t y = 1; y < 64; ++y) {
            AtomSet ys = AtomSet::from_bits64(6, y);
            REQUIRE(is_elementary_bruteforce(ys, p).elementary == is_elementary_poly(ys, p));
        }
    }
}

TEST_CASE("projection preserves elementariness both ways") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 300; ++round) {
        Program p = random_program(rng, 5, 6, {.allow_negation = false});
        for (std::uint64_t y = 1; y < 32; ++y) {
            AtomSet ys = AtomSet::from_bits64(5, y);
            bool on_p = is_elementary_bruteforce(ys, p).elementary;
            bool on_projection =
                detail::elementary_bruteforce(ys, detail::project_rules(p.rules(), ys), 20, {})
                    .elementary;
            REQUIRE(on_p == on_projection);
        }
    }
}

TEST_CASE("rule-subset programs only lose elementary sets") {
    std::mt19937_64 rng(37);
    for (int round = 0; round < 300; ++round) {
        Program p = random_program(rng, 5, 5, {.allow_negation = false});
        if (p.rule_count() == 0) continue;
        std::uniform_int_distribution<std::size_t> pick(0, p.rule_count() - 1);
        Program sub = without_rule(p, pick(rng));
        for (std::uint64_t y = 1; y < 32; ++y) {
            AtomSet ys = AtomSet::from_bits64(5, y);
            if (is_elementary_bruteforce(ys, sub).elementary)
                REQUIRE(is_elementary_bruteforce(ys, p).elementary);
        }
    }
}

TEST_CASE("atoms of an elementary set are pinned by head and body rules") {
    std::mt19937_64 rng(41);
    int elementary_seen = 0;
    for (int round = 0; round < 400; ++round) {
        Program p = random_program(rng, 5, 6, {.allow_negation = false});
        for (std::uint64_t y = 3; y < 32; ++y) {
            AtomSet ys = AtomSet::from_bits64(5, y);
            if (ys.count() < 2 || !is_elementary_bruteforce(ys, p).elementary) continue;
            ++elementary_seen;
            for (int a = ys.first(); a >= 0; a = ys.next(a)) {
                bool head_rule = false, body_rule = false;
                for (const Rule& r : p.rules()) {
                    AtomSet hy = r.head & ys;
                    AtomSet by = r.pos_body & ys;
                    if (hy.count() == 1 && hy.contains(a) && !r.pos_body.contains(a) && !by.empty())
                        head_rule = true;
                    if (by.count() == 1 && by.contains(a) && !r.head.contains(a) && !hy.empty())
                        body_rule = true;
                }
                REQUIRE(head_rule);
                REQUIRE(body_rule);
            }
        }
    }
    CHECK(elementary_seen > 20);
}

TEST_CASE("witness verification accepts the published pair and projections") {
    Program pw = parse(kWitnessExample);
    AtomSet sub = set_of(pw, {"b", "c", "e", "f"});
    Program wit = project(pw, sub);
    CHECK(verify_witness(sub, wit, pw).ok);

    Program pex = parse(kNotHefExample);
    AtomSet e = set_of(pex, {"a", "b", "c"});
    CHECK(verify_witness(e, project(pex, e), pex).ok);
}

TEST_CASE("witness verification rejects bad witnesses with reasons") {
    Program pex = parse(kNotHefExample);
    AtomSet e = set_of(pex, {"a", "b", "c"});

    CheckResult empty = verify_witness(e, Program{}, pex);
    CHECK(!empty.ok);
    CHECK(empty.reason.find("not elementary") != std::string::npos);

    CheckResult alien = verify_witness(e, parse("zz :- b."), pex);
    CHECK(!alien.ok);

    CheckResult outside = verify_witness(e, parse("d :- b."), pex);
    CHECK(!outside.ok);
    CHECK(outside.reason.find("outside") != std::string::npos);

    CheckResult negated = verify_witness(e, parse("b :- c, not a."), pex);
    CHECK(!negated.ok);
    CHECK(negated.reason.find("negative") != std::string::npos);

    CheckResult fabricated = verify_witness(e, parse("a :- c."), pex);
    CHECK(!fabricated.ok);
    CHECK(fabricated.reason.find("projection") != std::string::npos);
}

TEST_CASE("repeated runs are deterministic") {
    Program pw = parse(kWitnessExample);
    Program reduced = without_rule(pw, 0);
    ElementaryVerdict first = is_elementary_bruteforce(pw.all_atoms(), reduced);
    for (int i = 0; i < 10; ++i) {
        ElementaryVerdict again = is_elementary_bruteforce(pw.all_atoms(), reduced);
        REQUIRE(again.elementary == first.elementary);
        REQUIRE(*again.failing_subset == *first.failing_subset);
    }
}
