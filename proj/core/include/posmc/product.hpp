// product.hpp -- synchronized product of a structure with an automaton

#pragma once

#include <string>

#include "posmc/analysis.hpp"
#include "posmc/automaton.hpp"
#include "posmc/kripke.hpp"

namespace posmc {

/// Product structure over pairs "s|q". The pair (s, q) sits at index
/// s * automaton_states + q, so the state order is model-major. The goal set
/// collects the pairs whose automaton component is accepting.
struct ProductStructure {
    PossKripke structure;
    StateSet goal;
    std::string model_ref;
    std::string automaton_ref;
    std::size_t model_states;
    std::size_t automaton_states;

    int pair_index(int s, int q) const noexcept {
        return static_cast<int>(s * automaton_states + q);
    }
};

/// Builds the product. The automaton must be complete (so the product has no
/// terminal states and passes validation); the labels of m must use only
/// propositions of the automaton alphabet. Transition degrees of the product
/// copy the corresponding degrees of m; pairs are wired by automaton moves
/// on the label of the entered state.
ProductStructure product(const PossKripke& m, const FiniteAutomaton& a,
                         std::string model_ref = {}, std::string automaton_ref = {});

/// Possibility, per state s of m, that a path from s has a prefix whose
/// trace the NFA accepts: reachability of the goal set in the product,
/// joined over the automaton states reachable from an initial one on L(s).
/// Incomplete automata are completed first.
PossibilityReport check_safety(const PossKripke& m, const FiniteAutomaton& a);

/// Possibility, per state s of m, that a path from s has a trace accepted by
/// the Buechi automaton: repeated reachability of the goal set in the
/// product, joined over the same entry states. Incomplete automata are
/// completed first.
PossibilityReport check_omega(const PossKripke& m, const FiniteAutomaton& a);

}  // namespace posmc
