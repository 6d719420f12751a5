// kripke.hpp -- possibilistic Kripke structures and the measure of their paths

#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "posmc/fuzzy.hpp"

namespace posmc {

/// Unvalidated structure data, as produced by a parser or assembled by hand.
/// PossKripke::validate is the only way to turn this into a usable structure.
struct RawKripke {
    std::vector<std::string> states;
    std::vector<std::pair<std::string, double>> init;
    std::vector<std::tuple<std::string, std::string, double>> transitions;
    /// Proposition universe. Disengaged means: the propositions are the state
    /// names and every state is labeled with itself.
    std::optional<std::vector<std::string>> atomic_props;
    std::vector<std::pair<std::string, std::vector<std::string>>> labels;
};

/// Subset of the state space of a structure with `universe` states.
class StateSet {
public:
    StateSet() = default;
    /// Sorts and deduplicates; rejects indices outside [0, universe).
    StateSet(std::vector<int> indices, std::size_t universe);

    const std::vector<int>& indices() const noexcept { return indices_; }
    std::size_t universe() const noexcept { return universe_; }
    bool contains(int index) const noexcept;
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }

    bool operator==(const StateSet&) const = default;

private:
    std::vector<int> indices_;
    std::size_t universe_ = 0;
};

/// Finite path fragment: consecutive states joined by positive-possibility
/// transitions. Construct through PossKripke::path.
class FinitePath {
public:
    const std::vector<int>& state_indices() const noexcept { return indices_; }
    std::size_t universe() const noexcept { return universe_; }
    std::size_t length() const noexcept { return indices_.size() - 1; }  // edges

private:
    friend class PossKripke;
    FinitePath(std::vector<int> indices, std::size_t universe)
        : indices_(std::move(indices)), universe_(universe) {}

    std::vector<int> indices_;
    std::size_t universe_;
};

/// A validated possibilistic Kripke structure: states, a transition
/// possibility matrix whose rows each have supremum exactly 1, an initial
/// distribution with supremum exactly 1, and a labeling into a proposition
/// set. Immutable after construction; all queries are pure.
class PossKripke {
public:
    /// Checks every construction rule and returns the structure or throws
    /// ValidationError naming the offending declaration.
    static PossKripke validate(const RawKripke& raw);

    /// States as propositions, each state labeled with itself.
    static PossKripke from_matrix(const std::vector<std::string>& states,
                                  const FuzzyMatrix& transitions,
                                  const FuzzyVector& init);

    std::size_t num_states() const noexcept { return states_.size(); }
    const std::vector<std::string>& states() const noexcept { return states_; }
    const FuzzyMatrix& transitions() const noexcept { return transitions_; }
    const FuzzyVector& init() const noexcept { return init_; }
    const std::vector<std::string>& atomic_props() const noexcept { return atomic_props_; }
    /// Per-state label sets as sorted indices into atomic_props().
    const std::vector<std::vector<int>>& labels() const noexcept { return labels_; }
    std::vector<std::string> label_names(int state) const;
    /// True when the propositions are exactly the states, each labeled with itself.
    bool has_identity_labeling() const;

    int state_index(std::string_view name) const;  // throws UnknownStateError

    StateSet subset(std::span<const std::string> names) const;
    StateSet subset(std::initializer_list<std::string_view> names) const;
    StateSet empty_set() const;
    StateSet all_states() const;

    FinitePath path(std::span<const std::string> names) const;
    FinitePath path(std::initializer_list<std::string_view> names) const;

    // Direct successors/predecessors over positive transitions, and their
    // reflexive-transitive closures by graph search.
    StateSet post(std::string_view state) const;
    StateSet pre(std::string_view state) const;
    StateSet post_star(const StateSet& from) const;
    StateSet pre_star(const StateSet& to) const;

    /// min of the initial degree of the first state and every step degree.
    Possibility cylinder_possibility(const FinitePath& p) const;
    /// Join over the cylinders of the given paths; empty collection gives 0.
    Possibility path_set_possibility(std::span<const FinitePath> paths) const;

    /// Same structure with the initial distribution replaced by the point
    /// distribution at `state`.
    PossKripke rebase_initial(std::string_view state) const;

    bool operator==(const PossKripke&) const;

private:
    PossKripke(std::vector<std::string> states, FuzzyMatrix transitions, FuzzyVector init,
               std::vector<std::string> atomic_props, std::vector<std::vector<int>> labels);

    std::vector<std::string> states_;
    FuzzyMatrix transitions_;
    FuzzyVector init_;
    std::vector<std::string> atomic_props_;
    std::vector<std::vector<int>> labels_;
    std::map<std::string, int, std::less<>> index_;
};

}  // namespace posmc
