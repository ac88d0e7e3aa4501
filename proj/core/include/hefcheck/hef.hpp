#pragma once

#include <cstdint>
#include <optional>

#include "hefcheck/dep_graph.hpp"
#include "hefcheck/elementary.hpp"
#include "hefcheck/limits.hpp"
#include "hefcheck/program.hpp"

namespace hefcheck {

// Refutation of head-elementary-set-freeness: an elementary set meeting
// some rule head in at least two atoms, plus a nondisjunctive witness
// program certifying elementariness in polynomial time.
struct HefCertificate {
    AtomSet elementary_set;  // over the analyzed program's atoms
    Program witness;         // nondisjunctive, atoms restricted to the set
    int violating_rule = -1; // index into the analyzed program
};

enum class HefStatus { hef, not_hef, resource_limit };

struct HefStats {
    std::uint64_t components_scanned = 0;
    std::uint64_t candidates = 0;  // disjunctive candidate sets examined
    std::uint64_t pruned_connectivity = 0;
    std::uint64_t pruned_rule_conditions = 0;
    std::uint64_t bruteforce_checks = 0;
};

struct HefVerdict {
    HefStatus status = HefStatus::hef;
    std::optional<HefCertificate> certificate;  // present iff not_hef
    HefStats stats;
};

const char* to_string(HefStatus status);

// Decides head-elementary-set-freeness exactly within the given caps.
//
// Search: trivially hef without disjunctive rules; hef immediately when
// head-cycle-free; otherwise candidate sets are enumerated per strongly
// connected component (ascending cardinality, then mask value), pruned by
// induced strong connectivity and the per-atom rule conditions, and
// decided by the definitional subset check. The first surviving candidate
// in canonical order yields the certificate; the result is independent of
// the worker count. Caps exceeded anywhere give resource_limit, never a
// wrong verdict.
HefVerdict is_hef(const Program& p, const Limits& limits = {});

struct WitnessExtraction {
    AtomSet set;      // final elementary disjunctive set
    Program witness;  // nondisjunctive witness of it
};

// Builds a nondisjunctive witness from an elementary disjunctive set e:
// starting from the projection of p on e, repeatedly remove the first
// disjunctive rule d; if the set stays elementary keep the rest, else
// shrink to the minimal non-outbound subset and re-project. The number of
// disjunctive rules strictly decreases each round. Preconditions are
// checked (NotElementaryError / NotDisjunctiveError).
WitnessExtraction extract_witness(const AtomSet& e, const Program& p,
                                  int cap = kDefaultSubsetCap);

// The polynomial-time certificate check: the violating rule's head meets
// the set in at least two atoms, the witness is nondisjunctive, and
// verify_witness accepts. Never throws.
CheckResult verify_certificate(const Program& p, const HefCertificate& cert);

}  // namespace hefcheck
