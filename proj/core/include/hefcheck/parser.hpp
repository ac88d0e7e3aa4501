#pragma once

#include <string_view>

#include "hefcheck/program.hpp"

namespace hefcheck {

// Parses the program surface syntax:
//
//   rule := head (":-" body)? "."
//   head := atom (("|" | ";") atom)*
//   body := lit ("," lit)*
//   lit  := atom | "not" atom
//
// "%" starts a line comment, atoms match [a-z][A-Za-z0-9_]* and "not" is
// reserved. Duplicate atoms inside a head or body are tolerated (set
// semantics). Throws ParseError / EmptyHeadError with source spans.
Program parse_program(std::string_view text);

}  // namespace hefcheck
