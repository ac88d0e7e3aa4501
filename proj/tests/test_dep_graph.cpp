#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "hefcheck/dep_graph.hpp"
#include "hefcheck/elementary.hpp"
#include "hefcheck/hef.hpp"
#include "support/corpus.hpp"
#include "support/generators.hpp"

using namespace hefcheck;
using namespace testsupport;

namespace {

std::set<std::pair<std::string, std::string>> named_edges(const Program& p, const DepGraph& g) {
    std::set<std::pair<std::string, std::string>> out;
    for (int from = g.nodes().first(); from >= 0; from = g.nodes().next(from)) {
        for (int to : g.adjacency()[static_cast<std::size_t>(from)])
            out.insert({p.atom_name(from), p.atom_name(to)});
    }
    return out;
}

}  // namespace

TEST_CASE("edges and nodes of the five-rule example") {
    Program p = parse(kNotHefExample);
    DepGraph g = DepGraph::build(p);
    CHECK(g.nodes() == p.all_atoms());
    CHECK(named_edges(p, g) == std::set<std::pair<std::string, std::string>>{
                                   {"a", "b"}, {"a", "c"}, {"c", "b"}, {"b", "c"},
                                   {"b", "a"}, {"b", "d"}, {"c", "d"}});
}

TEST_CASE("atoms occurring only under negation have no node") {
    Program p = parse("a :- not b.");
    DepGraph g = DepGraph::build(p);
    CHECK(g.is_node(*p.atom_id("a")));
    CHECK(!g.is_node(*p.atom_id("b")));
    CHECK(g.scc_of(*p.atom_id("b")) == -1);
    CHECK(named_edges(p, g).empty());
}

TEST_CASE("edges of the negation example ignore negative bodies") {
    Program p = parse(kNegationExample);
    DepGraph g = DepGraph::build(p);
    CHECK(g.nodes() == p.all_atoms());
    CHECK(named_edges(p, g) == std::set<std::pair<std::string, std::string>>{
                                   {"a", "b"}, {"a", "c"}, {"d", "e"}, {"c", "e"}, {"f", "e"}});
}

TEST_CASE("components of the five-rule example") {
    Program p = parse(kNotHefExample);
    DepGraph g = DepGraph::build(p);
    REQUIRE(g.scc_count() == 2);
    CHECK(g.components()[0] == set_of(p, {"a", "b", "c"}));
    CHECK(g.components()[1] == set_of(p, {"d"}));
    CHECK(g.scc_of(*p.atom_id("a")) == 0);
    CHECK(g.scc_of(*p.atom_id("d")) == 1);
}

TEST_CASE("an edgeless graph is all singletons") {
    Program p = parse("a. b. c.");
    DepGraph g = DepGraph::build(p);
    CHECK(g.scc_count() == 3);
    for (const AtomSet& c : g.components()) CHECK(c.count() == 1);
}

TEST_CASE("the witness example is one component") {
    Program p = parse(kWitnessExample);
    DepGraph g = DepGraph::build(p);
    CHECK(g.scc_count() == 1);
    CHECK(g.components()[0] == p.all_atoms());
}

TEST_CASE("reverse topological order puts successors first") {
    Program p = parse(kNotHefExample);
    DepGraph g = DepGraph::build(p);
    const auto& topo = g.reverse_topological();
    REQUIRE(topo.size() == 2);
    // {d} is reachable from {a,b,c}, so it is emitted first.
    CHECK(g.components()[static_cast<std::size_t>(topo[0])] == set_of(p, {"d"}));
}

TEST_CASE("induced strong connectivity") {
    Program p = parse(kNotHefExample);
    DepGraph g = DepGraph::build(p);
    CHECK(g.induced_strongly_connected(set_of(p, {"a", "b", "c"})));
    CHECK(!g.induced_strongly_connected(set_of(p, {"a", "d"})));
    CHECK(g.induced_strongly_connected(set_of(p, {"a"})));
}

TEST_CASE("singleton sets pass even without a node, larger sets do not") {
    Program p = parse("a :- not b.");
    DepGraph g = DepGraph::build(p);
    AtomSet just_b = set_of(p, {"b"});
    CHECK(g.induced_strongly_connected(just_b));
    CHECK(!g.induced_strongly_connected(set_of(p, {"a", "b"})));
}

TEST_CASE("head-cycle-freeness of the golden programs") {
    Program pex = parse(kNotHefExample);
    HcfVerdict v = is_hcf(pex);
    CHECK(!v.hcf);
    CHECK(v.violation->rule_index == 0);
    CHECK(pex.atom_name(v.violation->atom_a) == "b");
    CHECK(pex.atom_name(v.violation->atom_b) == "c");

    CHECK(is_hcf(parse("a :- b.\nb :- not c.\nc.")).hcf);  // nondisjunctive
    CHECK(is_hcf(parse("a | b.")).hcf);                    // heads in distinct components
}

TEST_CASE("hcf work grows linearly with one rule's literal count") {
    auto wide_rule_program = [](int k) {
        std::vector<RawRule> rules;
        RawRule r;
        for (int i = 0; i < k; ++i) r.head.push_back("h" + std::to_string(i));
        for (int i = 0; i < k; ++i) r.pos_body.push_back("b" + std::to_string(i));
        rules.push_back(std::move(r));
        return Program::intern(rules);
    };
    HcfVerdict small = is_hcf(wide_rule_program(64));
    HcfVerdict large = is_hcf(wide_rule_program(256));
    CHECK(small.hcf);
    CHECK(large.hcf);
    // A quadratic edge expansion would grow the counter 16x here.
    CHECK(large.ops <= 6 * small.ops);
}

TEST_CASE("hcf implies hef on random programs") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        Program p = random_program(rng, 5, 6);
        if (is_hcf(p).hcf) {
            HefVerdict v = is_hef(p);
            REQUIRE(v.status == HefStatus::hef);
        }
    }
}

TEST_CASE("a disconnected induced subgraph is never elementary") {
    std::mt19937_64 rng(6);
    for (int round = 0; round < 300; ++round) {
        Program p = random_program(rng, 5, 6, {.allow_negation = false});
        DepGraph g = DepGraph::build(p);
        std::uniform_int_distribution<std::uint64_t> mask(1, 31);
        AtomSet y = AtomSet::from_bits64(5, mask(rng));
        if (y.count() < 2) continue;
        if (!g.induced_strongly_connected(y))
            REQUIRE(!is_elementary_bruteforce(y, p).elementary);
    }
}

TEST_CASE("dot export names nodes and edges") {
    Program p = parse(kNotHefExample);
    std::string dot = DepGraph::build(p).to_dot(p);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("a -> b;") != std::string::npos);
    CHECK(dot.find("fillcolor=") != std::string::npos);
}
