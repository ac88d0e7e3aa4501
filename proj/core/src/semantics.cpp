#include "hefcheck/semantics.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "hefcheck/errors.hpp"

namespace hefcheck {

Program reduct(const Program& p, const Interpretation& i) {
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        if (r.neg_body.intersects(i)) continue;
        rules.push_back(Rule{r.head, r.pos_body, AtomSet(p.atom_count())});
    }
    return Program::from_parts(p.atom_names(), std::move(rules));
}

bool is_model(const Program& p, const Interpretation& i) {
    for (const Rule& r : p.rules()) {
        if (r.head.intersects(i)) continue;
        bool body_true = r.pos_body.subset_of(i) && !r.neg_body.intersects(i);
        if (body_true) return false;
    }
    return true;
}

std::vector<Interpretation> stable_models(const Program& p, int atom_cap) {
    const int n = p.atom_count();
    if (n > atom_cap)
        throw CapExceededError("program has " + std::to_string(n) + " atoms, enumeration cap is " +
                               std::to_string(atom_cap));
    if (n > 62) throw CapExceededError("stable model enumeration supports at most 62 atoms");

    struct Bits {
        std::uint64_t head, pos, neg;
    };
    std::vector<Bits> rules;
    rules.reserve(p.rule_count());
    for (const Rule& r : p.rules())
        rules.push_back({r.head.to_bits64(), r.pos_body.to_bits64(), r.neg_body.to_bits64()});

    // True iff x models the reduct of p w.r.t. m.
    auto models_reduct = [&](std::uint64_t m, std::uint64_t x) {
        for (const Bits& r : rules) {
            if (r.neg & m) continue;           // rule deleted by the reduct
            if (r.head & x) continue;          // head satisfied
            if ((r.pos & ~x) == 0) return false;  // body holds, head does not
        }
        return true;
    };

    std::vector<Interpretation> out;
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < end; ++m) {
        if (!models_reduct(m, m)) continue;
        bool minimal = true;
        if (m != 0) {
            // Proper subsets of m, including the empty one.
            for (std::uint64_t sub = (m - 1) & m;; sub = (sub - 1) & m) {
                if (models_reduct(m, sub)) {
                    minimal = false;
                    break;
                }
                if (sub == 0) break;
            }
        }
        if (minimal) out.push_back(AtomSet::from_bits64(n, m));
    }
    return out;
}

Program shift(const Program& p) {
    std::vector<Rule> rules;
    for (const Rule& r : p.rules()) {
        if (!r.disjunctive()) {
            rules.push_back(r);
            continue;
        }
        for (int h = r.head.first(); h >= 0; h = r.head.next(h)) {
            Rule shifted{AtomSet(p.atom_count()), r.pos_body, r.neg_body};
            shifted.head.insert(h);
            AtomSet moved = r.head;
            moved.erase(h);
            shifted.neg_body |= moved;
            rules.push_back(std::move(shifted));
        }
    }
    return Program::from_parts(p.atom_names(), std::move(rules));
}

}  // namespace hefcheck
