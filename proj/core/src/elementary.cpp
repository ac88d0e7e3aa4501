#include "hefcheck/elementary.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hefcheck/errors.hpp"

namespace hefcheck {

namespace {

void check_proper_subset(const AtomSet& z, const AtomSet& y) {
    if (z.empty()) throw BadSubsetError("subset must be nonempty");
    if (!z.subset_of(y)) throw BadSubsetError("subset must lie within the tested set");
    if (z == y) throw BadSubsetError("subset must be proper");
}

bool rule_witnesses_outbound(const Rule& r, const AtomSet& z, const AtomSet& rest) {
    // Head atom in z, positive body atom in y\z, none of the opposite.
    return r.head.intersects(z) && r.pos_body.intersects(rest) && !r.pos_body.intersects(z) &&
           !r.head.intersects(rest);
}

}  // namespace

OutboundEvidence is_outbound(const AtomSet& z, const AtomSet& y, const Program& p) {
    check_proper_subset(z, y);
    AtomSet rest = y - z;
    for (std::size_t i = 0; i < p.rule_count(); ++i) {
        if (rule_witnesses_outbound(p.rules()[i], z, rest)) return {z, static_cast<int>(i)};
    }
    return {z, std::nullopt};
}

OutboundEvidence is_outbound_projected(const AtomSet& z, const AtomSet& y, const Program& p) {
    check_proper_subset(z, y);
    AtomSet rest = y - z;
    for (std::size_t i = 0; i < p.rule_count(); ++i) {
        const Rule& r = p.rules()[i];
        AtomSet h = r.head & y;
        AtomSet b = r.pos_body & y;
        if (!h.empty() && h.subset_of(z) && !b.empty() && b.subset_of(rest))
            return {z, static_cast<int>(i)};
    }
    return {z, std::nullopt};
}

namespace detail {

ElementaryVerdict elementary_bruteforce(const AtomSet& y, std::span<const Rule> rules, int cap,
                                        const Deadline& deadline) {
    const int k = y.count();
    if (k == 0) throw BadSubsetError("elementary test requires a nonempty set");
    cap = std::min(cap, kHardSubsetCap);
    if (k > cap)
        throw CapExceededError("set of " + std::to_string(k) + " atoms exceeds subset cap " +
                               std::to_string(cap));
    if (k == 1) return {true, std::nullopt};

    // Compress y's members to bit positions; ascending positions preserve
    // the ascending mask-value order of subsets.
    const std::vector<int> pos = y.to_vector();
    std::vector<std::uint32_t> heads, bodies;
    heads.reserve(rules.size());
    bodies.reserve(rules.size());
    for (const Rule& r : rules) {
        std::uint32_t h = 0, b = 0;
        for (int i = 0; i < k; ++i) {
            if (r.head.contains(pos[static_cast<std::size_t>(i)])) h |= 1u << i;
            if (r.pos_body.contains(pos[static_cast<std::size_t>(i)])) b |= 1u << i;
        }
        if (h == 0) continue;  // can never witness an outbound subset
        heads.push_back(h);
        bodies.push_back(b);
    }
    const std::uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
    const std::size_t nrules = heads.size();

    std::uint64_t probe = 0;
    auto outbound = [&](std::uint32_t z) {
        const std::uint32_t rest = full & ~z;
        for (std::size_t i = 0; i < nrules; ++i) {
            if ((heads[i] & z) && (bodies[i] & rest) && !(bodies[i] & z) && !(heads[i] & rest))
                return true;
        }
        return false;
    };

    // Nonempty proper subsets, ascending cardinality then mask value; the
    // first failure is therefore inclusion-minimal.
    for (int card = 1; card < k; ++card) {
        std::uint32_t z = (1u << card) - 1;
        for (;;) {
            if (deadline && (++probe & 0xfff) == 0 &&
                std::chrono::steady_clock::now() > *deadline)
                throw TimeBudgetError("time budget exceeded during subset enumeration");
            if (!outbound(z)) {
                AtomSet failing(y.capacity());
                for (int i = 0; i < k; ++i)
                    if (z & (1u << i)) failing.insert(pos[static_cast<std::size_t>(i)]);
                return {false, std::move(failing)};
            }
            // Gosper's hack: next mask with the same popcount.
            std::uint32_t c = z & (0u - z);
            std::uint32_t rmask = z + c;
            if (rmask > full) break;
            z = (((z ^ rmask) >> 2) / c) | rmask;
            if (z > full) break;
        }
    }
    return {true, std::nullopt};
}

bool elementary_poly(const AtomSet& y, std::span<const Rule> rules) {
    for (const Rule& r : rules) {
        if (r.disjunctive()) throw DisjunctiveInputError("polynomial check requires singleton heads");
    }
    const int k = y.count();
    if (k == 0) throw BadSubsetError("elementary test requires a nonempty set");
    if (k == 1) return true;

    const std::vector<int> pos = y.to_vector();
    std::vector<int> index(static_cast<std::size_t>(y.capacity()), -1);
    for (int i = 0; i < k; ++i) index[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] = i;

    // Relevant rules: head atom in y, some positive body atom in y.
    struct RelRule {
        int head;
        std::vector<int> body;
    };
    std::vector<RelRule> rel;
    for (const Rule& r : rules) {
        int h = r.head.first();
        if (!y.contains(h)) continue;
        AtomSet by = r.pos_body & y;
        if (by.empty()) continue;
        RelRule rr;
        rr.head = index[static_cast<std::size_t>(h)];
        for (int b = by.first(); b >= 0; b = by.next(b)) rr.body.push_back(index[static_cast<std::size_t>(b)]);
        rel.push_back(std::move(rr));
    }

    // Grow the edge set to a fixpoint: a rule contributes head-to-body
    // edges once its body within y sits inside one component of the
    // current graph.
    std::vector<std::vector<bool>> edge(static_cast<std::size_t>(k),
                                        std::vector<bool>(static_cast<std::size_t>(k), false));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k));
    std::vector<int> comp(static_cast<std::size_t>(k));
    int comp_count = 0;

    auto recompute_components = [&]() {
        // Kosaraju double sweep; the node count is |y|.
        std::vector<int> order;
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        std::vector<std::pair<int, std::size_t>> st;
        for (int s = 0; s < k; ++s) {
            if (seen[static_cast<std::size_t>(s)]) continue;
            st.push_back({s, 0});
            seen[static_cast<std::size_t>(s)] = true;
            while (!st.empty()) {
                auto& [v, ci] = st.back();
                if (ci < adj[static_cast<std::size_t>(v)].size()) {
                    int w = adj[static_cast<std::size_t>(v)][ci++];
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = true;
                        st.push_back({w, 0});
                    }
                } else {
                    order.push_back(v);
                    st.pop_back();
                }
            }
        }
        std::vector<std::vector<int>> radj(static_cast<std::size_t>(k));
        for (int v = 0; v < k; ++v)
            for (int w : adj[static_cast<std::size_t>(v)]) radj[static_cast<std::size_t>(w)].push_back(v);
        std::fill(comp.begin(), comp.end(), -1);
        comp_count = 0;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (comp[static_cast<std::size_t>(*it)] != -1) continue;
            std::vector<int> frontier{*it};
            comp[static_cast<std::size_t>(*it)] = comp_count;
            while (!frontier.empty()) {
                int v = frontier.back();
                frontier.pop_back();
                for (int w : radj[static_cast<std::size_t>(v)]) {
                    if (comp[static_cast<std::size_t>(w)] == -1) {
                        comp[static_cast<std::size_t>(w)] = comp_count;
                        frontier.push_back(w);
                    }
                }
            }
            ++comp_count;
        }
    };

    recompute_components();
    bool changed = true;
    while (changed) {
        changed = false;
        for (const RelRule& rr : rel) {
            int c0 = comp[static_cast<std::size_t>(rr.body.front())];
            bool single = std::all_of(rr.body.begin(), rr.body.end(),
                                      [&](int b) { return comp[static_cast<std::size_t>(b)] == c0; });
            if (!single) continue;
            for (int b : rr.body) {
                if (!edge[static_cast<std::size_t>(rr.head)][static_cast<std::size_t>(b)]) {
                    edge[static_cast<std::size_t>(rr.head)][static_cast<std::size_t>(b)] = true;
                    adj[static_cast<std::size_t>(rr.head)].push_back(b);
                    changed = true;
                }
            }
        }
        if (changed) recompute_components();
    }
    return comp_count == 1;
}

}  // namespace detail

ElementaryVerdict is_elementary_bruteforce(const AtomSet& y, const Program& p, int cap) {
    return detail::elementary_bruteforce(y, p.rules(), cap, std::nullopt);
}

bool is_elementary_poly(const AtomSet& y, const Program& p) {
    return detail::elementary_poly(y, p.rules());
}

CheckResult verify_witness(const AtomSet& e, const Program& w, const Program& p) {
    // Map the witness rules into the analyzed program's id space.
    std::vector<int> w_to_p(static_cast<std::size_t>(w.atom_count()), -1);
    for (int id = 0; id < w.atom_count(); ++id) {
        auto pid = p.atom_id(w.atom_name(id));
        if (!pid) return {false, "witness atom '" + w.atom_name(id) + "' does not occur in the program"};
        if (!e.contains(*pid))
            return {false, "witness atom '" + w.atom_name(id) + "' lies outside the elementary set"};
        w_to_p[static_cast<std::size_t>(id)] = *pid;
    }
    auto remap = [&](const AtomSet& s) {
        AtomSet out(p.atom_count());
        for (int id = s.first(); id >= 0; id = s.next(id)) out.insert(w_to_p[static_cast<std::size_t>(id)]);
        return out;
    };
    std::vector<Rule> mapped;
    for (const Rule& r : w.rules()) {
        if (!r.neg_body.empty()) return {false, "witness rule has a negative body"};
        mapped.push_back(Rule{remap(r.head), remap(r.pos_body), AtomSet(p.atom_count())});
    }

    // Every witness rule must be the projection on e of some program rule;
    // duplicates on either side are irrelevant.
    const std::vector<Rule> projected = detail::project_rules(p.rules(), e);
    for (std::size_t i = 0; i < mapped.size(); ++i) {
        bool found = std::any_of(projected.begin(), projected.end(), [&](const Rule& pr) {
            return pr.head == mapped[i].head && pr.pos_body == mapped[i].pos_body;
        });
        if (!found)
            return {false, "witness rule " + std::to_string(i) + " is not a projection of any program rule"};
    }

    bool nondisjunctive = std::none_of(mapped.begin(), mapped.end(),
                                       [](const Rule& r) { return r.disjunctive(); });
    bool elementary = false;
    if (nondisjunctive) {
        elementary = detail::elementary_poly(e, mapped);
    } else {
        try {
            elementary = detail::elementary_bruteforce(e, mapped, kDefaultSubsetCap, std::nullopt).elementary;
        } catch (const CapExceededError& ex) {
            return {false, std::string("cannot decide elementariness: ") + ex.what()};
        }
    }
    if (!elementary) return {false, "set is not elementary for the witness"};
    return {true, ""};
}

}  // namespace hefcheck
