// io.hpp -- text formats, DOT export, value rendering

#pragma once

#include <string>
#include <string_view>

#include "posmc/automaton.hpp"
#include "posmc/kripke.hpp"
#include "posmc/product.hpp"

namespace posmc {

/// Shortest decimal form that parses back to the same binary64 value.
std::string format_value(double v);

/// Parses and validates a model document (grammar in docs/format.md).
/// Throws ParseError with a 1-based line:column location.
PossKripke parse_model(std::string_view text);

/// Parses an automaton document (grammar in docs/format.md).
FiniteAutomaton parse_automaton(std::string_view text);

// Canonical documents; parse(render(x)) is structurally identical to x.
std::string render_model(const PossKripke& m);
std::string render_automaton(const FiniteAutomaton& a);

/// Deterministic DOT digraph: one node per state, an incoming value-labeled
/// arrow per positive initial degree, one value-labeled edge per positive
/// transition. Goal states of a product are drawn as double circles.
std::string export_dot(const PossKripke& m);
std::string export_dot(const ProductStructure& p);

}  // namespace posmc
