// automaton.hpp -- NFA/NBA over an alphabet of proposition sets

#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "posmc/errors.hpp"

namespace posmc {

/// One input symbol: a set of proposition names.
using Symbol = std::vector<std::string>;

/// Nondeterministic finite automaton, read either over finite words (nfa)
/// or infinite words with Buechi acceptance (nba). The alphabet is the power
/// set of alphabet(); symbols are handled internally as bitmasks over the
/// proposition order. A (state, symbol) pair without stored successors has
/// none -- the automaton may be incomplete.
class FiniteAutomaton {
public:
    enum class Kind { nfa, nba };

    static FiniteAutomaton make(
        Kind kind, std::vector<std::string> states, std::vector<std::string> alphabet,
        const std::vector<std::tuple<std::string, Symbol, std::string>>& transitions,
        const std::vector<std::string>& initial, const std::vector<std::string>& accepting);

    Kind kind() const noexcept { return kind_; }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
    const std::vector<int>& initial() const noexcept { return initial_; }
    const std::vector<int>& accepting() const noexcept { return accepting_; }
    bool is_accepting(int state) const noexcept;

    /// Bitmask of a proposition set; rejects unknown and duplicate names.
    std::uint64_t symbol_mask(std::span<const std::string> props) const;
    /// Names of a mask, sorted lexicographically.
    Symbol mask_symbol(std::uint64_t mask) const;

    /// Successor set of (state, symbol); empty when undefined.
    const std::vector<int>& successors(int state, std::uint64_t symbol) const;
    /// All stored transitions in canonical (state, symbol, successor) order.
    std::vector<std::tuple<int, std::uint64_t, int>> transition_triples() const;

    std::uint64_t symbol_count() const noexcept { return std::uint64_t{1} << alphabet_.size(); }
    /// True iff every (state, symbol) pair has at least one successor.
    bool is_complete() const;

    bool operator==(const FiniteAutomaton&) const = default;

private:
    FiniteAutomaton() = default;

    Kind kind_ = Kind::nfa;
    std::vector<std::string> states_;
    std::vector<std::string> alphabet_;
    std::vector<std::map<std::uint64_t, std::vector<int>>> delta_;  // per state
    std::vector<int> initial_;    // sorted
    std::vector<int> accepting_;  // sorted

    friend FiniteAutomaton complete(const FiniteAutomaton& a);
};

/// Language-preserving completion: when some (state, symbol) pair has no
/// successor, a fresh non-accepting absorbing state is added and every such
/// pair is routed to it. Complete inputs are returned unchanged.
FiniteAutomaton complete(const FiniteAutomaton& a);

/// Finite-word acceptance for kind nfa: some run for the word ends in an
/// accepting state. The empty word is accepted iff an initial state accepts.
bool accepts_finite(const FiniteAutomaton& a, std::span<const Symbol> word);
bool accepts_finite_masks(const FiniteAutomaton& a, std::span<const std::uint64_t> word);

}  // namespace posmc
