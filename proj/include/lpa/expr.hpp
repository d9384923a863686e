#pragma once

#include <string>

#include "lpa/element.hpp"

namespace lpa {

/// Element expression grammar (whitespace insignificant):
///   expr := term (('+'|'-') term)*
///   term := [int '*'] atom ('*' atom)*
///   atom := 'p(' vid ')' | 's(' eid ('.' eid)* ')' | 'sx(' eid ('.' eid)* ')'
///         | '(' expr ')'
/// `sx(...)` is the ghost (starred) path. A bare literal `0` denotes the
/// zero element (there is no global unit, so other bare integers are
/// rejected). Edge identifiers may themselves contain '.'; path bodies are
/// segmented against the graph's edge table, longest match first, guided
/// by path composition.
Element parse_element(GraphRef g, Ring ring, const std::string& text);

/// Deterministic rendering: terms in basis order, "0" for the zero
/// element. parse_element(to_expr(x)) == x.
std::string to_expr(const Element& x);

std::string to_expr(const Monomial& m);

}  // namespace lpa
