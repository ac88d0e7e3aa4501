#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hefcheck/program.hpp"

namespace hefcheck {

// Positive dependency graph: one node per atom occurring in some head or
// positive body, and an edge (m, n) whenever some rule has m in its
// positive body and n in its head. Atoms occurring only under negation
// have no node.
class DepGraph {
  public:
    static DepGraph build(const Program& p);

    const AtomSet& nodes() const { return nodes_; }
    bool is_node(int atom) const { return nodes_.contains(atom); }

    // Strongly connected components, numbered by ascending smallest member.
    int scc_of(int atom) const;  // -1 for non-node atoms
    int scc_count() const { return static_cast<int>(components_.size()); }
    const std::vector<AtomSet>& components() const { return components_; }
    // Component indices in reverse topological order of the condensation.
    const std::vector<int>& reverse_topological() const { return topo_; }

    // True iff the subgraph induced by y is strongly connected. Singletons
    // are strongly connected; any larger y containing a non-node atom is not.
    bool induced_strongly_connected(const AtomSet& y) const;

    // Deduplicated successor lists, ascending.
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    std::string to_dot(const Program& p) const;

  private:
    AtomSet nodes_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> radj_;
    std::vector<int> scc_id_;
    std::vector<AtomSet> components_;
    std::vector<int> topo_;
};

struct HcfViolation {
    int rule_index = -1;
    int atom_a = -1;  // two head atoms sharing a component, ascending
    int atom_b = -1;
};

struct HcfVerdict {
    bool hcf = true;
    std::optional<HcfViolation> violation;
    // Work counter; grows linearly with atoms + rule literals.
    std::uint64_t ops = 0;
};

// Head-cycle-freeness: no rule has two head atoms in one strongly
// connected component of the positive dependency graph. Runs in time
// linear in the program size (atoms + rule literals) by routing each
// rule's body-to-head edges through a per-rule junction node.
HcfVerdict is_hcf(const Program& p);

}  // namespace hefcheck
