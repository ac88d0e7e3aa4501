#pragma once

#include <optional>
#include <span>
#include <string>

#include "hefcheck/limits.hpp"
#include "hefcheck/program.hpp"

namespace hefcheck {

// Outcome of an outbound test: the witnessing rule (first in source
// order) when z is outbound in y, and the tested subset itself.
struct OutboundEvidence {
    AtomSet subset;
    std::optional<int> rule_index;
    bool outbound() const { return rule_index.has_value(); }
};

// z is outbound in y if some rule's head/body straddles the partition
// <z, y\z>: a head atom in z, a positive body atom in y\z, no positive
// body atom in z, no head atom in y\z. Requires {} != z != y, z within y;
// violations raise BadSubsetError.
OutboundEvidence is_outbound(const AtomSet& z, const AtomSet& y, const Program& p);

// Equivalent formulation over the projection of p on y: some projected
// rule B' :- H' with {} != H' within z and {} != B' within y\z. Kept as an
// independent route for differential testing.
OutboundEvidence is_outbound_projected(const AtomSet& z, const AtomSet& y, const Program& p);

struct ElementaryVerdict {
    bool elementary = false;
    // First non-outbound subset in the canonical order (ascending
    // cardinality, then ascending mask value); inclusion-minimal.
    std::optional<AtomSet> failing_subset;
};

// Definitional decision: y is elementary iff every nonempty proper subset
// of y is outbound in y. Exponential in |y|; |y| above cap raises
// CapExceededError. This is the semantic ground truth the polynomial
// check and the search are validated against.
ElementaryVerdict is_elementary_bruteforce(const AtomSet& y, const Program& p,
                                           int cap = kDefaultSubsetCap);

// Polynomial check for nondisjunctive programs via the elementary-subgraph
// fixpoint: starting from no edges over y, a rule a :- B contributes the
// edges (a, b) for b in B&y once B&y is nonempty and lies in a single
// strongly connected component of the current edge set; y is elementary
// iff the fixpoint graph is strongly connected. Disjunctive input raises
// DisjunctiveInputError.
bool is_elementary_poly(const AtomSet& y, const Program& p);

struct CheckResult {
    bool ok = false;
    std::string reason;
    explicit operator bool() const { return ok; }
};

// Witness verification: every rule of w must be the projection on e of
// some rule of p (duplicates ignored), and e must be elementary for w
// (polynomial route when w is nondisjunctive). Never throws; failures are
// reported with a reason.
CheckResult verify_witness(const AtomSet& e, const Program& w, const Program& p);

namespace detail {

ElementaryVerdict elementary_bruteforce(const AtomSet& y, std::span<const Rule> rules, int cap,
                                        const Deadline& deadline);
bool elementary_poly(const AtomSet& y, std::span<const Rule> rules);

}  // namespace detail

}  // namespace hefcheck
