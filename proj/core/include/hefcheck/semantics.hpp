#pragma once

#include <vector>

#include "hefcheck/limits.hpp"
#include "hefcheck/program.hpp"

namespace hefcheck {

using Interpretation = AtomSet;

// Gelfond-Lifschitz reduct: drop every rule with a negated atom inside i,
// strip negation from the rest. Always positive; rule order preserved.
Program reduct(const Program& p, const Interpretation& i);

// A rule is true in i when some head atom is in i or its body fails
// (a positive body atom outside i, or a negated atom inside i).
bool is_model(const Program& p, const Interpretation& i);

// Exact stable model enumeration: i is stable iff it is a minimal model
// of the reduct w.r.t. i. Returned in ascending interpretation-mask order.
// Programs with more than atom_cap atoms raise CapExceededError.
std::vector<Interpretation> stable_models(const Program& p, int atom_cap = kDefaultModelCap);

// Shifting: each disjunctive rule B, F -> h1 | ... | hk becomes the k
// rules B, F + (heads - hi) -> hi; nondisjunctive rules are copied. The
// result is nondisjunctive over the same atom table and has the same
// stable models exactly when disjunction in p is inessential.
Program shift(const Program& p);

}  // namespace hefcheck
