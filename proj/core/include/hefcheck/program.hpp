#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hefcheck/atom_set.hpp"

namespace hefcheck {

// Hard ceiling on the number of atoms a program may intern. The default
// analysis cap is much lower (see Limits); masks widen transparently up to
// this bound.
inline constexpr int kMaxAtoms = 1024;

// A rule H :- B, not F. The head is never empty; a rule is disjunctive
// when the head holds more than one atom.
struct Rule {
    AtomSet head;
    AtomSet pos_body;
    AtomSet neg_body;
    bool disjunctive() const { return head.count() > 1; }
};

// Name-level rule used to build programs programmatically.
struct RawRule {
    std::vector<std::string> head;
    std::vector<std::string> pos_body;
    std::vector<std::string> neg_body;
};

// Immutable propositional disjunctive program: an ordered rule list over
// interned atoms. Rule order is the textual order of the source and is the
// canonical iteration order everywhere. Duplicate rules are kept.
class Program {
  public:
    Program() = default;

    // Atom ids are assigned densely in first-occurrence order
    // (head, positive body, negative body of each rule in turn).
    // Throws EmptyHeadError / BadAtomNameError / CapExceededError.
    static Program intern(const std::vector<RawRule>& rules);

    // Assembles a program from an explicit atom table and id-level rules.
    // Used by program transformations that preserve or restrict the table.
    static Program from_parts(std::vector<std::string> names, std::vector<Rule> rules);

    int atom_count() const { return static_cast<int>(names_.size()); }
    const std::string& atom_name(int id) const { return names_[static_cast<std::size_t>(id)]; }
    std::optional<int> atom_id(std::string_view name) const;
    const std::vector<std::string>& atom_names() const { return names_; }

    const std::vector<Rule>& rules() const { return rules_; }
    std::size_t rule_count() const { return rules_.size(); }

    AtomSet empty_set() const { return AtomSet(atom_count()); }
    AtomSet all_atoms() const;
    // Builds a set from atom names; throws Error on unknown names.
    AtomSet set_of(const std::vector<std::string>& names) const;

  private:
    std::vector<std::string> names_;
    std::vector<Rule> rules_;
};

// True iff some rule has more than one head atom inside s.
bool is_disjunctive_set(const AtomSet& s, const Program& p);

// Per-rule projection on x: B&x :- H&x, kept only when both parts are
// nonempty; negative bodies are dropped. The result's atom table is the
// restriction of p's table to x.
Program project(const Program& p, const AtomSet& x);

// Rule-for-rule equality by atom names (atom ids may differ).
bool structurally_equal(const Program& a, const Program& b);

bool valid_atom_name(std::string_view name);

namespace detail {

// Projection at the rule level, staying in the source program's id space.
std::vector<Rule> project_rules(std::span<const Rule> rules, const AtomSet& x);

}  // namespace detail

}  // namespace hefcheck
