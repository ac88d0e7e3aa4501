#pragma once

#include <string>

#include "hefcheck/program.hpp"

namespace hefcheck {

// Canonical rule text: atoms in ascending id order inside head and body,
// positive body before negative, "h1 | h2 :- b1, b2, not f1."
std::string render_rule(const Program& p, const Rule& rule);

// One rule per line in source order, no trailing newline.
// parse_program(render_program(p)) is structurally identical to p.
std::string render_program(const Program& p);

}  // namespace hefcheck
