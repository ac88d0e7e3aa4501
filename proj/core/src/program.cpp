#include "hefcheck/program.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <string>

#include "hefcheck/errors.hpp"

namespace hefcheck {

bool valid_atom_name(std::string_view name) {
    if (name.empty()) return false;
    if (name == "not") return false;  // reserved word
    if (name[0] < 'a' || name[0] > 'z') return false;
    for (char ch : name) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    }
    return true;
}

std::optional<int> Program::atom_id(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return std::nullopt;
}

Program Program::intern(const std::vector<RawRule>& rules) {
    Program p;
    auto lookup = [&p](const std::string& name) -> int {
        if (!valid_atom_name(name)) throw BadAtomNameError(name);
        if (auto id = p.atom_id(name)) return *id;
        if (p.atom_count() >= kMaxAtoms)
            throw CapExceededError("program exceeds " + std::to_string(kMaxAtoms) + " atoms");
        p.names_.push_back(name);
        return p.atom_count() - 1;
    };
    // First pass assigns ids in first-occurrence order.
    for (std::size_t i = 0; i < rules.size(); ++i) {
        if (rules[i].head.empty()) throw EmptyHeadError(i);
        for (const auto& n : rules[i].head) lookup(n);
        for (const auto& n : rules[i].pos_body) lookup(n);
        for (const auto& n : rules[i].neg_body) lookup(n);
    }
    const int cap = p.atom_count();
    p.rules_.reserve(rules.size());
    for (const auto& raw : rules) {
        Rule r{AtomSet(cap), AtomSet(cap), AtomSet(cap)};
        for (const auto& n : raw.head) r.head.insert(*p.atom_id(n));
        for (const auto& n : raw.pos_body) r.pos_body.insert(*p.atom_id(n));
        for (const auto& n : raw.neg_body) r.neg_body.insert(*p.atom_id(n));
        p.rules_.push_back(std::move(r));
    }
    return p;
}

Program Program::from_parts(std::vector<std::string> names, std::vector<Rule> rules) {
    if (names.size() > static_cast<std::size_t>(kMaxAtoms))
        throw CapExceededError("program exceeds " + std::to_string(kMaxAtoms) + " atoms");
    Program p;
    p.names_ = std::move(names);
    p.rules_ = std::move(rules);
    const int cap = p.atom_count();
    for (std::size_t i = 0; i < p.rules_.size(); ++i) {
        const Rule& r = p.rules_[i];
        assert(r.head.capacity() == cap && r.pos_body.capacity() == cap &&
               r.neg_body.capacity() == cap);
        (void)cap;
        if (r.head.empty()) throw EmptyHeadError(i);
    }
    return p;
}

AtomSet Program::all_atoms() const {
    AtomSet s(atom_count());
    for (int id = 0; id < atom_count(); ++id) s.insert(id);
    return s;
}

AtomSet Program::set_of(const std::vector<std::string>& names) const {
    AtomSet s(atom_count());
    for (const auto& n : names) {
        auto id = atom_id(n);
        if (!id) throw Error("unknown atom '" + n + "'");
        s.insert(*id);
    }
    return s;
}

bool is_disjunctive_set(const AtomSet& s, const Program& p) {
    for (const Rule& r : p.rules()) {
        AtomSet hit = r.head & s;
        if (hit.count() > 1) return true;
    }
    return false;
}

namespace detail {

std::vector<Rule> project_rules(std::span<const Rule> rules, const AtomSet& x) {
    std::vector<Rule> out;
    for (const Rule& r : rules) {
        AtomSet h = r.head & x;
        if (h.empty()) continue;
        AtomSet b = r.pos_body & x;
        if (b.empty()) continue;
        out.push_back(Rule{std::move(h), std::move(b), AtomSet(x.capacity())});
    }
    return out;
}

}  // namespace detail

Program project(const Program& p, const AtomSet& x) {
    // Remap the surviving atoms to a dense table that preserves id order.
    std::vector<int> old_to_new(static_cast<std::size_t>(p.atom_count()), -1);
    std::vector<std::string> names;
    for (int id = x.first(); id >= 0; id = x.next(id)) {
        old_to_new[static_cast<std::size_t>(id)] = static_cast<int>(names.size());
        names.push_back(p.atom_name(id));
    }
    const int cap = static_cast<int>(names.size());
    auto remap = [&](const AtomSet& s) {
        AtomSet out(cap);
        for (int id = s.first(); id >= 0; id = s.next(id)) out.insert(old_to_new[static_cast<std::size_t>(id)]);
        return out;
    };
    std::vector<Rule> rules;
    for (const Rule& r : detail::project_rules(p.rules(), x)) {
        rules.push_back(Rule{remap(r.head), remap(r.pos_body), AtomSet(cap)});
    }
    return Program::from_parts(std::move(names), std::move(rules));
}

bool structurally_equal(const Program& a, const Program& b) {
    if (a.rule_count() != b.rule_count()) return false;
    auto names_of = [](const Program& p, const AtomSet& s) {
        std::vector<std::string> out;
        for (int id = s.first(); id >= 0; id = s.next(id)) out.push_back(p.atom_name(id));
        std::sort(out.begin(), out.end());
        return out;
    };
    for (std::size_t i = 0; i < a.rule_count(); ++i) {
        const Rule& ra = a.rules()[i];
        const Rule& rb = b.rules()[i];
        if (names_of(a, ra.head) != names_of(b, rb.head)) return false;
        if (names_of(a, ra.pos_body) != names_of(b, rb.pos_body)) return false;
        if (names_of(a, ra.neg_body) != names_of(b, rb.neg_body)) return false;
    }
    return true;
}

}  // namespace hefcheck
