#include "hefcheck/printer.hpp"

#include <string>

namespace hefcheck {

std::string render_rule(const Program& p, const Rule& rule) {
    std::string out;
    bool sep = false;
    for (int id = rule.head.first(); id >= 0; id = rule.head.next(id)) {
        if (sep) out += " | ";
        out += p.atom_name(id);
        sep = true;
    }
    if (!rule.pos_body.empty() || !rule.neg_body.empty()) {
        out += " :- ";
        sep = false;
        for (int id = rule.pos_body.first(); id >= 0; id = rule.pos_body.next(id)) {
            if (sep) out += ", ";
            out += p.atom_name(id);
            sep = true;
        }
        for (int id = rule.neg_body.first(); id >= 0; id = rule.neg_body.next(id)) {
            if (sep) out += ", ";
            out += "not ";
            out += p.atom_name(id);
            sep = true;
        }
    }
    out += ".";
    return out;
}

std::string render_program(const Program& p) {
    std::string out;
    for (std::size_t i = 0; i < p.rule_count(); ++i) {
        if (i > 0) out += "\n";
        out += render_rule(p, p.rules()[i]);
    }
    return out;
}

}  // namespace hefcheck
