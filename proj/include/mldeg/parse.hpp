#pragma once

#include "mldeg/polynomial.hpp"

#include <string>

namespace mldeg {

// Text grammar: terms joined by '+'/'-'; each term is an optional integer or
// rational coefficient ("a/b"), optionally followed by variable powers
// ("v", "v^3") joined by '*'.  The '*' between a coefficient and the first
// variable may be omitted.  Variable names match [a-zA-Z][a-zA-Z0-9_]* and
// must belong to `vars`.
Polynomial parse_polynomial(const std::string& text, const VarSetPtr& vars);

// Canonical rendering: terms sorted descending by degrevlex, explicit '*'
// and '^', coefficients as integers or "a/b".  parse(format(f)) == f.
std::string format_polynomial(const Polynomial& f);

} // namespace mldeg
