#include "hefcheck/hef.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "hefcheck/errors.hpp"

namespace hefcheck {

const char* to_string(HefStatus status) {
    switch (status) {
        case HefStatus::hef: return "hef";
        case HefStatus::not_hef: return "not_hef";
        case HefStatus::resource_limit: return "resource_limit";
    }
    return "?";
}

namespace {

// Per-atom rule requirements for members of an elementary set larger than
// one: each atom needs a rule whose head meets the set exactly in it (and
// whose body meets the set elsewhere), and a rule whose body meets the set
// exactly in it (and whose head meets the set elsewhere).
bool rule_conditions_hold(const AtomSet& y, const Program& p) {
    std::vector<std::pair<AtomSet, AtomSet>> restricted;
    restricted.reserve(p.rule_count());
    for (const Rule& r : p.rules()) restricted.emplace_back(r.head & y, r.pos_body & y);
    for (int a = y.first(); a >= 0; a = y.next(a)) {
        bool head_rule = false, body_rule = false;
        for (std::size_t i = 0; i < restricted.size(); ++i) {
            const auto& [hy, by] = restricted[i];
            const Rule& r = p.rules()[i];
            if (!head_rule && hy.count() == 1 && hy.contains(a) && !r.pos_body.contains(a) && !by.empty())
                head_rule = true;
            if (!body_rule && by.count() == 1 && by.contains(a) && !r.head.contains(a) && !hy.empty())
                body_rule = true;
            if (head_rule && body_rule) break;
        }
        if (!head_rule || !body_rule) return false;
    }
    return true;
}

struct CandidateOutcome {
    bool pruned_connectivity = false;
    bool pruned_rule_conditions = false;
    bool brute_checked = false;
    bool elementary = false;
};

struct Search {
    const Program& p;
    const Limits& limits;
    const DepGraph* graph = nullptr;
    Deadline deadline;
    HefStats stats;

    CandidateOutcome evaluate(const AtomSet& y) const {
        CandidateOutcome out;
        if (limits.prune_connectivity && !graph->induced_strongly_connected(y)) {
            out.pruned_connectivity = true;
            return out;
        }
        if (limits.prune_rule_conditions && !rule_conditions_hold(y, p)) {
            out.pruned_rule_conditions = true;
            return out;
        }
        out.brute_checked = true;
        out.elementary =
            detail::elementary_bruteforce(y, p.rules(), limits.subset_cap, deadline).elementary;
        return out;
    }

    // Evaluates a batch of candidates and returns the index of the first
    // elementary one, or -1. Every candidate of the batch is examined so
    // the statistics do not depend on the worker count.
    int process_batch(const std::vector<AtomSet>& batch, std::vector<CandidateOutcome>& results) {
        results.assign(batch.size(), {});
        const int workers = std::min<int>(limits.threads, static_cast<int>(batch.size()));
        if (workers <= 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) results[i] = evaluate(batch[i]);
        } else {
            std::atomic<std::size_t> cursor{0};
            std::mutex error_mutex;
            std::exception_ptr error;
            auto worker = [&]() {
                try {
                    for (;;) {
                        std::size_t i = cursor.fetch_add(1);
                        if (i >= batch.size()) break;
                        results[i] = evaluate(batch[i]);
                    }
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            };
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
            if (error) std::rethrow_exception(error);
        }
        int found = -1;
        for (std::size_t i = 0; i < batch.size(); ++i) {
            stats.candidates++;
            if (results[i].pruned_connectivity) stats.pruned_connectivity++;
            if (results[i].pruned_rule_conditions) stats.pruned_rule_conditions++;
            if (results[i].brute_checked) stats.bruteforce_checks++;
            if (found < 0 && results[i].elementary) found = static_cast<int>(i);
        }
        return found;
    }
};

constexpr std::size_t kBatchSize = 64;

}  // namespace

HefVerdict is_hef(const Program& p, const Limits& limits) {
    HefVerdict verdict;
    bool any_disjunctive =
        std::any_of(p.rules().begin(), p.rules().end(), [](const Rule& r) { return r.disjunctive(); });
    if (!any_disjunctive) {
        verdict.status = HefStatus::hef;
        return verdict;
    }
    if (p.atom_count() > limits.atom_cap) {
        verdict.status = HefStatus::resource_limit;
        return verdict;
    }

    Search search{p, limits};
    search.deadline = limits.deadline();

    DepGraph graph = DepGraph::build(p);
    search.graph = &graph;

    if (limits.prune_connectivity && is_hcf(p).hcf) {
        // No rule has two head atoms sharing a component, and elementary
        // sets never leave a component.
        verdict.status = HefStatus::hef;
        verdict.stats = search.stats;
        return verdict;
    }

    // Candidate spaces: one per strongly connected component holding at
    // least two head atoms of some rule, or the whole atom set when the
    // connectivity restriction is disabled.
    std::vector<AtomSet> spaces;
    if (limits.prune_connectivity) {
        for (const AtomSet& comp : graph.components()) {
            if (is_disjunctive_set(comp, p)) spaces.push_back(comp);
        }
    } else {
        spaces.push_back(p.all_atoms());
    }

    bool limited = false;
    std::vector<AtomSet> batch;
    std::vector<CandidateOutcome> results;
    try {
        for (const AtomSet& space : spaces) {
            search.stats.components_scanned++;
            const int k = space.count();
            if (k > std::min(limits.subset_cap, kHardSubsetCap)) {
                limited = true;
                continue;
            }
            const std::vector<int> pos = space.to_vector();
            const std::uint32_t full = (1u << k) - 1;
            batch.clear();

            auto flush = [&]() -> bool {
                if (batch.empty()) return false;
                int found = search.process_batch(batch, results);
                if (found >= 0) {
                    WitnessExtraction ex =
                        extract_witness(batch[static_cast<std::size_t>(found)], p, limits.subset_cap);
                    int violating = -1;
                    for (std::size_t i = 0; i < p.rule_count(); ++i) {
                        if ((p.rules()[i].head & ex.set).count() > 1) {
                            violating = static_cast<int>(i);
                            break;
                        }
                    }
                    verdict.status = HefStatus::not_hef;
                    verdict.certificate =
                        HefCertificate{std::move(ex.set), std::move(ex.witness), violating};
                    return true;
                }
                batch.clear();
                return false;
            };

            bool done = false;
            for (int card = 2; card <= k && !done; ++card) {
                std::uint32_t m = (1u << card) - 1;
                for (;;) {
                    if (search.deadline && std::chrono::steady_clock::now() > *search.deadline)
                        throw TimeBudgetError("time budget exceeded");
                    AtomSet y(p.atom_count());
                    for (int i = 0; i < k; ++i)
                        if (m & (1u << i)) y.insert(pos[static_cast<std::size_t>(i)]);
                    if (is_disjunctive_set(y, p)) {
                        batch.push_back(std::move(y));
                        if (batch.size() >= kBatchSize && flush()) {
                            done = true;
                            break;
                        }
                    }
                    std::uint32_t c = m & (0u - m);
                    std::uint32_t rmask = m + c;
                    if (rmask > full) break;
                    m = (((m ^ rmask) >> 2) / c) | rmask;
                    if (m > full) break;
                }
            }
            if (!done && flush()) done = true;
            if (done) {
                verdict.stats = search.stats;
                return verdict;
            }
        }
    } catch (const TimeBudgetError&) {
        verdict.status = HefStatus::resource_limit;
        verdict.stats = search.stats;
        return verdict;
    }

    verdict.status = limited ? HefStatus::resource_limit : HefStatus::hef;
    verdict.stats = search.stats;
    return verdict;
}

WitnessExtraction extract_witness(const AtomSet& e, const Program& p, int cap) {
    if (!detail::elementary_bruteforce(e, p.rules(), cap, std::nullopt).elementary)
        throw NotElementaryError("set is not elementary for the program");
    if (!is_disjunctive_set(e, p))
        throw NotDisjunctiveError("set is not disjunctive for the program");

    AtomSet s = e;
    std::vector<Rule> w = detail::project_rules(p.rules(), e);
    auto disjunctive_count = [](const std::vector<Rule>& rules) {
        return std::count_if(rules.begin(), rules.end(), [](const Rule& r) { return r.disjunctive(); });
    };
    auto dcount = disjunctive_count(w);
    while (dcount > 0) {
        std::size_t di = 0;
        while (!w[di].disjunctive()) ++di;
        std::vector<Rule> rest;
        rest.reserve(w.size() - 1);
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != di) rest.push_back(w[i]);

        ElementaryVerdict v = detail::elementary_bruteforce(s, rest, cap, std::nullopt);
        if (v.elementary) {
            w = std::move(rest);
        } else {
            // The minimal non-outbound subset absorbs the dropped rule's
            // head; re-project the current witness onto it.
            AtomSet shrunk = *v.failing_subset;
            w = detail::project_rules(w, shrunk);
            s = std::move(shrunk);
        }
        auto next_count = disjunctive_count(w);
        if (next_count >= dcount)
            throw Error("internal error: disjunctive rule count failed to decrease");
        dcount = next_count;
    }

    // Package the witness over its own atom table.
    std::vector<int> old_to_new(static_cast<std::size_t>(p.atom_count()), -1);
    std::vector<std::string> names;
    for (int id = s.first(); id >= 0; id = s.next(id)) {
        old_to_new[static_cast<std::size_t>(id)] = static_cast<int>(names.size());
        names.push_back(p.atom_name(id));
    }
    const int cap_new = static_cast<int>(names.size());
    std::vector<Rule> rules;
    for (const Rule& r : w) {
        Rule out{AtomSet(cap_new), AtomSet(cap_new), AtomSet(cap_new)};
        for (int id = r.head.first(); id >= 0; id = r.head.next(id))
            out.head.insert(old_to_new[static_cast<std::size_t>(id)]);
        for (int id = r.pos_body.first(); id >= 0; id = r.pos_body.next(id))
            out.pos_body.insert(old_to_new[static_cast<std::size_t>(id)]);
        rules.push_back(std::move(out));
    }
    return {std::move(s), Program::from_parts(std::move(names), std::move(rules))};
}

CheckResult verify_certificate(const Program& p, const HefCertificate& cert) {
    if (cert.violating_rule < 0 || cert.violating_rule >= static_cast<int>(p.rule_count()))
        return {false, "violating rule index out of range"};
    const Rule& r = p.rules()[static_cast<std::size_t>(cert.violating_rule)];
    if ((r.head & cert.elementary_set).count() < 2)
        return {false, "violating rule's head does not meet the set in two atoms"};
    for (const Rule& wr : cert.witness.rules()) {
        if (wr.disjunctive()) return {false, "witness contains a disjunctive rule"};
    }
    return verify_witness(cert.elementary_set, cert.witness, p);
}

}  // namespace hefcheck
