#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "hefcheck/dep_graph.hpp"
#include "hefcheck/dimacs.hpp"
#include "hefcheck/elementary.hpp"
#include "hefcheck/hef.hpp"
#include "hefcheck/parser.hpp"
#include "hefcheck/printer.hpp"
#include "hefcheck/sat_reduction.hpp"
#include "hefcheck/semantics.hpp"

namespace {

using namespace hefcheck;

// Chain with one wide disjunctive rule; head-cycle-free.
Program chain_program(int k) {
    std::vector<RawRule> rules;
    for (int i = 0; i + 1 < k; ++i)
        rules.push_back(RawRule{{"x" + std::to_string(i + 1)}, {"x" + std::to_string(i)}, {}});
    RawRule wide;
    for (int i = 0; i < k; i += 2) wide.head.push_back("x" + std::to_string(i));
    wide.pos_body.push_back("x" + std::to_string(k - 1));
    rules.push_back(std::move(wide));
    return Program::intern(rules);
}

Cnf3 all_polarity3() {
    Cnf3 f{3, {}};
    for (int s = 0; s < 8; ++s)
        f.clauses.push_back({(s & 4) ? -1 : 1, (s & 2) ? -2 : 2, (s & 1) ? -3 : 3});
    return f;
}

void BM_IsHcf(benchmark::State& state) {
    Program p = chain_program(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(is_hcf(p).hcf);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsHcf)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oN);

void BM_ElementaryBruteforce(benchmark::State& state) {
    Reduction r = build_reduction(all_polarity3());
    AtomSet y(r.program.atom_count());
    for (int j = 0; j <= 9; ++j) y.insert(r.atoms.clause_atom(j));
    for (int i = 1; i <= static_cast<int>(state.range(0)); ++i) y.insert(r.atoms.var_atom(i));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_elementary_bruteforce(y, r.program).elementary);
}
BENCHMARK(BM_ElementaryBruteforce)->DenseRange(1, 3);

void BM_IsHefUnsatReduction(benchmark::State& state) {
    Reduction r = build_reduction(all_polarity3());
    for (auto _ : state) {
        HefVerdict v = is_hef(r.program);
        benchmark::DoNotOptimize(v.status);
    }
}
BENCHMARK(BM_IsHefUnsatReduction);

void BM_ParseRender(benchmark::State& state) {
    Program p = chain_program(256);
    std::string text = render_program(p);
    for (auto _ : state) benchmark::DoNotOptimize(render_program(parse_program(text)).size());
}
BENCHMARK(BM_ParseRender);

void BM_StableModels(benchmark::State& state) {
    std::mt19937_64 rng(3);
    std::vector<RawRule> rules;
    std::uniform_int_distribution<int> atom(0, 11);
    for (int i = 0; i < 16; ++i) {
        RawRule r;
        r.head.push_back("x" + std::to_string(atom(rng)));
        r.pos_body.push_back("x" + std::to_string(atom(rng)));
        r.neg_body.push_back("x" + std::to_string(atom(rng)));
        rules.push_back(std::move(r));
    }
    Program p = Program::intern(rules);
    for (auto _ : state) benchmark::DoNotOptimize(stable_models(p, 20).size());
}
BENCHMARK(BM_StableModels);

}  // namespace

BENCHMARK_MAIN();
