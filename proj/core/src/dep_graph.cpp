#include "hefcheck/dep_graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace hefcheck {

namespace {

// Iterative Tarjan; component ids are assigned in emission order, which is
// reverse topological over the condensation.
struct SccResult {
    std::vector<int> comp;  // -1 for nodes excluded from the graph
    int count = 0;
};

SccResult tarjan(int n, const std::vector<std::vector<int>>& adj, const std::vector<bool>& active) {
    SccResult res;
    res.comp.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
    std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
    std::vector<int> stack;
    int next_index = 0;

    struct Frame {
        int node;
        std::size_t child;
    };
    std::vector<Frame> call;

    for (int root = 0; root < n; ++root) {
        if (!active[static_cast<std::size_t>(root)] || index[static_cast<std::size_t>(root)] != -1)
            continue;
        call.push_back({root, 0});
        index[static_cast<std::size_t>(root)] = lowlink[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = true;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& succs = adj[static_cast<std::size_t>(f.node)];
            if (f.child < succs.size()) {
                int w = succs[f.child++];
                if (!active[static_cast<std::size_t>(w)]) continue;
                if (index[static_cast<std::size_t>(w)] == -1) {
                    call.push_back({w, 0});
                    index[static_cast<std::size_t>(w)] = lowlink[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = true;
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    lowlink[static_cast<std::size_t>(f.node)] =
                        std::min(lowlink[static_cast<std::size_t>(f.node)], index[static_cast<std::size_t>(w)]);
                }
            } else {
                int v = f.node;
                call.pop_back();
                if (!call.empty()) {
                    int parent = call.back().node;
                    lowlink[static_cast<std::size_t>(parent)] =
                        std::min(lowlink[static_cast<std::size_t>(parent)], lowlink[static_cast<std::size_t>(v)]);
                }
                if (lowlink[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[static_cast<std::size_t>(w)] = false;
                        res.comp[static_cast<std::size_t>(w)] = res.count;
                        if (w == v) break;
                    }
                    ++res.count;
                }
            }
        }
    }
    return res;
}

}  // namespace

DepGraph DepGraph::build(const Program& p) {
    DepGraph g;
    const int n = p.atom_count();
    g.nodes_ = AtomSet(n);
    for (const Rule& r : p.rules()) {
        g.nodes_ |= r.head;
        g.nodes_ |= r.pos_body;
    }
    g.adj_.assign(static_cast<std::size_t>(n), {});
    g.radj_.assign(static_cast<std::size_t>(n), {});
    for (const Rule& r : p.rules()) {
        for (int b = r.pos_body.first(); b >= 0; b = r.pos_body.next(b)) {
            for (int h = r.head.first(); h >= 0; h = r.head.next(h)) {
                g.adj_[static_cast<std::size_t>(b)].push_back(h);
                g.radj_[static_cast<std::size_t>(h)].push_back(b);
            }
        }
    }
    for (auto& v : g.adj_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    for (auto& v : g.radj_) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    std::vector<bool> active(static_cast<std::size_t>(n), false);
    for (int id = g.nodes_.first(); id >= 0; id = g.nodes_.next(id))
        active[static_cast<std::size_t>(id)] = true;
    SccResult scc = tarjan(n, g.adj_, active);

    // Canonical numbering: components ordered by their smallest member.
    std::vector<int> emission_to_canonical(static_cast<std::size_t>(scc.count), -1);
    std::vector<AtomSet> comps;
    for (int id = 0; id < n; ++id) {
        int e = scc.comp[static_cast<std::size_t>(id)];
        if (e < 0) continue;
        if (emission_to_canonical[static_cast<std::size_t>(e)] == -1) {
            emission_to_canonical[static_cast<std::size_t>(e)] = static_cast<int>(comps.size());
            comps.push_back(AtomSet(n));
        }
        comps[static_cast<std::size_t>(emission_to_canonical[static_cast<std::size_t>(e)])].insert(id);
    }
    g.components_ = std::move(comps);
    g.scc_id_.assign(static_cast<std::size_t>(n), -1);
    for (int id = 0; id < n; ++id) {
        int e = scc.comp[static_cast<std::size_t>(id)];
        if (e >= 0) g.scc_id_[static_cast<std::size_t>(id)] = emission_to_canonical[static_cast<std::size_t>(e)];
    }
    g.topo_.clear();
    for (int e = 0; e < scc.count; ++e) g.topo_.push_back(emission_to_canonical[static_cast<std::size_t>(e)]);
    return g;
}

int DepGraph::scc_of(int atom) const {
    if (atom < 0 || atom >= static_cast<int>(scc_id_.size())) return -1;
    return scc_id_[static_cast<std::size_t>(atom)];
}

bool DepGraph::induced_strongly_connected(const AtomSet& y) const {
    const int size = y.count();
    if (size == 0) return false;
    if (size == 1) return true;
    if (!y.subset_of(nodes_)) return false;

    auto reaches_all = [&](const std::vector<std::vector<int>>& edges) {
        AtomSet seen(y.capacity());
        std::vector<int> frontier{y.first()};
        seen.insert(y.first());
        int seen_count = 1;
        while (!frontier.empty()) {
            int v = frontier.back();
            frontier.pop_back();
            for (int w : edges[static_cast<std::size_t>(v)]) {
                if (!y.contains(w) || seen.contains(w)) continue;
                seen.insert(w);
                ++seen_count;
                frontier.push_back(w);
            }
        }
        return seen_count == size;
    };
    return reaches_all(adj_) && reaches_all(radj_);
}

std::string DepGraph::to_dot(const Program& p) const {
    std::string out = "digraph dependencies {\n";
    for (int id = nodes_.first(); id >= 0; id = nodes_.next(id)) {
        out += "  " + p.atom_name(id) + " [style=filled, colorscheme=set312, fillcolor=" +
               std::to_string(scc_of(id) % 12 + 1) + "];\n";
    }
    for (int id = nodes_.first(); id >= 0; id = nodes_.next(id)) {
        for (int succ : adj_[static_cast<std::size_t>(id)]) {
            out += "  " + p.atom_name(id) + " -> " + p.atom_name(succ) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

HcfVerdict is_hcf(const Program& p) {
    HcfVerdict verdict;
    const int n = p.atom_count();
    const int r = static_cast<int>(p.rule_count());
    // Junction graph: body atom -> rule node -> head atoms. Keeps the edge
    // count linear in the rule literals while preserving reachability
    // between atoms.
    const int total = n + r;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(total));
    std::vector<bool> active(static_cast<std::size_t>(total), false);
    for (int ri = 0; ri < r; ++ri) {
        const Rule& rule = p.rules()[static_cast<std::size_t>(ri)];
        const int rule_node = n + ri;
        for (int b = rule.pos_body.first(); b >= 0; b = rule.pos_body.next(b)) {
            adj[static_cast<std::size_t>(b)].push_back(rule_node);
            active[static_cast<std::size_t>(b)] = true;
            ++verdict.ops;
        }
        for (int h = rule.head.first(); h >= 0; h = rule.head.next(h)) {
            adj[static_cast<std::size_t>(rule_node)].push_back(h);
            active[static_cast<std::size_t>(h)] = true;
            ++verdict.ops;
        }
        if (!rule.pos_body.empty()) active[static_cast<std::size_t>(rule_node)] = true;
    }
    verdict.ops += static_cast<std::uint64_t>(total);
    SccResult scc = tarjan(total, adj, active);

    // Two head atoms of one rule in one component violate the property;
    // report the first rule and its first offending pair in atom order.
    std::vector<int> first_seen(static_cast<std::size_t>(scc.count), -1);
    std::vector<int> epoch(static_cast<std::size_t>(scc.count), -1);
    for (int ri = 0; ri < r; ++ri) {
        const Rule& rule = p.rules()[static_cast<std::size_t>(ri)];
        if (!rule.disjunctive()) continue;
        for (int h = rule.head.first(); h >= 0; h = rule.head.next(h)) {
            ++verdict.ops;
            int comp = scc.comp[static_cast<std::size_t>(h)];
            if (comp < 0) continue;
            if (epoch[static_cast<std::size_t>(comp)] == ri) {
                verdict.hcf = false;
                verdict.violation = HcfViolation{ri, first_seen[static_cast<std::size_t>(comp)], h};
                return verdict;
            }
            epoch[static_cast<std::size_t>(comp)] = ri;
            first_seen[static_cast<std::size_t>(comp)] = h;
        }
    }
    return verdict;
}

}  // namespace hefcheck
