// analysis.hpp -- possibility of reachability, until, and repeated reachability

#pragma once

#include <optional>
#include <string_view>

#include "posmc/kripke.hpp"

namespace posmc {

enum class Method { closure_formula, fixed_point, bounded_iteration, repeated_closure };

std::string_view method_name(Method m) noexcept;

/// Per-state possibility values of a property, together with its value under
/// the initial distribution: aggregate = max_s min(I(s), per_state(s)).
struct PossibilityReport {
    std::vector<std::string> states;
    std::vector<Possibility> per_state;
    Possibility aggregate;
    Method method;
    std::optional<int> iteration_count;

    Possibility at(std::string_view state) const;
};

/// Split of the state space used by the until solver. s_one is the target
/// set itself; s_zero contains the states with no target-reaching path
/// through the constraint set; s_query is everything else, the part the
/// fixed-point iteration actually runs on.
struct UntilPartition {
    StateSet s_zero;
    StateSet s_one;
    StateSet s_query;
};

/// Possibility of eventually entering `target`, per state, read off the
/// transitive closure of the transition matrix. States already in the target
/// get 1.
PossibilityReport reach_via_closure(const PossKripke& m, const StateSet& target);

UntilPartition build_partition(const PossKripke& m, const StateSet& constraint,
                               const StateSet& target);

/// Possibility of reaching `target` through `constraint` states, per state,
/// as the least fixed point of X = (A o X) v b on the s_query block.
PossibilityReport until_possibility(const PossKripke& m, const StateSet& constraint,
                                    const StateSet& target);

/// Same event restricted to at most `bound` steps: the bound-th iterate of
/// the fixed-point operator from the zero vector.
PossibilityReport bounded_until_possibility(const PossKripke& m, const StateSet& constraint,
                                            const StateSet& target, int bound);

/// Possibility of visiting `target` infinitely often, per state s:
/// the join over targets a of min(closure(s,a), closure(a,a)). The closure
/// entry (a,a) ranges over cycles of length at least one; there is no
/// length-zero loop.
PossibilityReport repeated_reach_possibility(const PossKripke& m, const StateSet& target);

}  // namespace posmc
