#include "posmc/kripke.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace posmc {

namespace {

bool in_unit_range(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

StateSet::StateSet(std::vector<int> indices, std::size_t universe)
    : indices_(std::move(indices)), universe_(universe) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (int i : indices_)
        if (i < 0 || static_cast<std::size_t>(i) >= universe_)
            throw UnknownStateError("state index " + std::to_string(i) +
                                    " outside universe of size " + std::to_string(universe_));
}

bool StateSet::contains(int index) const noexcept {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

PossKripke::PossKripke(std::vector<std::string> states, FuzzyMatrix transitions, FuzzyVector init,
                       std::vector<std::string> atomic_props, std::vector<std::vector<int>> labels)
    : states_(std::move(states)),
      transitions_(std::move(transitions)),
      init_(std::move(init)),
      atomic_props_(std::move(atomic_props)),
      labels_(std::move(labels)) {
    for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], static_cast<int>(i));
}

PossKripke PossKripke::validate(const RawKripke& raw) {
    if (raw.states.empty()) throw ValidationError("a structure needs at least one state");

    std::map<std::string, int, std::less<>> index;
    for (std::size_t i = 0; i < raw.states.size(); ++i)
        if (!index.emplace(raw.states[i], static_cast<int>(i)).second)
            throw ValidationError("duplicate state '" + raw.states[i] + "'");

    const std::size_t n = raw.states.size();
    auto state_of = [&](const std::string& name, const char* where) {
        auto it = index.find(name);
        if (it == index.end())
            throw ValidationError(std::string("unknown state '") + name + "' in " + where);
        return it->second;
    };

    // Initial distribution.
    std::vector<double> init(n, 0.0);
    std::set<int> init_seen;
    for (const auto& [name, value] : raw.init) {
        const int s = state_of(name, "initial distribution");
        if (!init_seen.insert(s).second)
            throw ValidationError("duplicate initial entry for state '" + name + "'");
        if (!in_unit_range(value))
            throw ValidationError("initial value of state '" + name + "' outside [0,1]: " +
                                  std::to_string(value));
        init[s] = value;
    }
    if (*std::max_element(init.begin(), init.end()) != 1.0)
        throw ValidationError("initial distribution supremum is not exactly 1");

    // Transition matrix.
    std::vector<double> entries(n * n, 0.0);
    std::set<std::pair<int, int>> edge_seen;
    for (const auto& [src, dst, value] : raw.transitions) {
        const int a = state_of(src, "a transition");
        const int b = state_of(dst, "a transition");
        if (!edge_seen.emplace(a, b).second)
            throw ValidationError("duplicate transition " + src + " -> " + dst);
        if (!in_unit_range(value))
            throw ValidationError("transition value " + src + " -> " + dst +
                                  " outside [0,1]: " + std::to_string(value));
        entries[static_cast<std::size_t>(a) * n + b] = value;
    }
    for (std::size_t i = 0; i < n; ++i) {
        double row_sup = 0.0;
        for (std::size_t j = 0; j < n; ++j) row_sup = std::max(row_sup, entries[i * n + j]);
        if (row_sup != 1.0)
            throw ValidationError("transition row supremum of state '" + raw.states[i] +
                                  "' is not exactly 1");
    }

    // Propositions and labels.
    std::vector<std::string> props;
    std::vector<std::vector<int>> labels(n);
    if (raw.atomic_props.has_value()) {
        props = *raw.atomic_props;
        std::map<std::string, int, std::less<>> prop_index;
        for (std::size_t i = 0; i < props.size(); ++i)
            if (!prop_index.emplace(props[i], static_cast<int>(i)).second)
                throw ValidationError("duplicate proposition '" + props[i] + "'");
        std::set<int> labeled;
        for (const auto& [name, set] : raw.labels) {
            const int s = state_of(name, "a label");
            if (!labeled.insert(s).second)
                throw ValidationError("duplicate label entry for state '" + name + "'");
            std::vector<int> ids;
            for (const auto& prop : set) {
                auto it = prop_index.find(prop);
                if (it == prop_index.end())
                    throw ValidationError("label of state '" + name +
                                          "' references unknown proposition '" + prop + "'");
                ids.push_back(it->second);
            }
            std::sort(ids.begin(), ids.end());
            if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
                throw ValidationError("label of state '" + name + "' repeats a proposition");
            labels[s] = std::move(ids);
        }
    } else {
        if (!raw.labels.empty())
            throw ValidationError("labels given without an atomic proposition set");
        props = raw.states;
        for (std::size_t i = 0; i < n; ++i) labels[i] = {static_cast<int>(i)};
    }

    std::vector<Possibility> mat_entries(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) mat_entries[i] = Possibility(entries[i]);
    std::vector<Possibility> init_entries(n);
    for (std::size_t i = 0; i < n; ++i) init_entries[i] = Possibility(init[i]);

    return PossKripke(raw.states, FuzzyMatrix(raw.states, std::move(mat_entries)),
                      FuzzyVector(raw.states, std::move(init_entries)), std::move(props),
                      std::move(labels));
}

PossKripke PossKripke::from_matrix(const std::vector<std::string>& states,
                                   const FuzzyMatrix& transitions, const FuzzyVector& init) {
    if (transitions.labels() != states || init.labels() != states)
        throw DimensionError("from_matrix: matrix/vector labels must equal the state list");
    RawKripke raw;
    raw.states = states;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (init[i] != Possibility::zero()) raw.init.emplace_back(states[i], init[i].value());
        for (std::size_t j = 0; j < states.size(); ++j)
            if (transitions(i, j) != Possibility::zero())
                raw.transitions.emplace_back(states[i], states[j], transitions(i, j).value());
    }
    return validate(raw);
}

std::vector<std::string> PossKripke::label_names(int state) const {
    std::vector<std::string> out;
    for (int p : labels_.at(static_cast<std::size_t>(state))) out.push_back(atomic_props_[p]);
    return out;
}

bool PossKripke::has_identity_labeling() const {
    if (atomic_props_ != states_) return false;
    for (std::size_t i = 0; i < states_.size(); ++i)
        if (labels_[i] != std::vector<int>{static_cast<int>(i)}) return false;
    return true;
}

int PossKripke::state_index(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw UnknownStateError("unknown state '" + std::string(name) + "'");
    return it->second;
}

StateSet PossKripke::subset(std::span<const std::string> names) const {
    std::vector<int> ids;
    for (const auto& name : names) ids.push_back(state_index(name));
    return StateSet(std::move(ids), num_states());
}

StateSet PossKripke::subset(std::initializer_list<std::string_view> names) const {
    std::vector<int> ids;
    for (auto name : names) ids.push_back(state_index(name));
    return StateSet(std::move(ids), num_states());
}

StateSet PossKripke::empty_set() const { return StateSet({}, num_states()); }

StateSet PossKripke::all_states() const {
    std::vector<int> ids(num_states());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    return StateSet(std::move(ids), num_states());
}

FinitePath PossKripke::path(std::span<const std::string> names) const {
    if (names.empty()) throw ValidationError("a finite path needs at least one state");
    std::vector<int> ids;
    for (const auto& name : names) ids.push_back(state_index(name));
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
        if (transitions_(ids[i], ids[i + 1]) == Possibility::zero())
            throw NotAPathError("no transition " + names[i] + " -> " + names[i + 1]);
    return FinitePath(std::move(ids), num_states());
}

FinitePath PossKripke::path(std::initializer_list<std::string_view> names) const {
    std::vector<std::string> copy;
    for (auto name : names) copy.emplace_back(name);
    return path(std::span<const std::string>(copy));
}

StateSet PossKripke::post(std::string_view state) const {
    const int s = state_index(state);
    std::vector<int> out;
    for (std::size_t j = 0; j < num_states(); ++j)
        if (transitions_(s, j) != Possibility::zero()) out.push_back(static_cast<int>(j));
    return StateSet(std::move(out), num_states());
}

StateSet PossKripke::pre(std::string_view state) const {
    const int s = state_index(state);
    std::vector<int> out;
    for (std::size_t i = 0; i < num_states(); ++i)
        if (transitions_(i, s) != Possibility::zero()) out.push_back(static_cast<int>(i));
    return StateSet(std::move(out), num_states());
}

StateSet PossKripke::post_star(const StateSet& from) const {
    if (from.universe() != num_states())
        throw DimensionError("state set belongs to a different structure");
    std::vector<char> seen(num_states(), 0);
    std::deque<int> work(from.indices().begin(), from.indices().end());
    for (int s : from.indices()) seen[s] = 1;
    while (!work.empty()) {
        const int s = work.front();
        work.pop_front();
        for (std::size_t j = 0; j < num_states(); ++j)
            if (!seen[j] && transitions_(s, j) != Possibility::zero()) {
                seen[j] = 1;
                work.push_back(static_cast<int>(j));
            }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<int>(i));
    return StateSet(std::move(out), num_states());
}

StateSet PossKripke::pre_star(const StateSet& to) const {
    if (to.universe() != num_states())
        throw DimensionError("state set belongs to a different structure");
    std::vector<char> seen(num_states(), 0);
    std::deque<int> work(to.indices().begin(), to.indices().end());
    for (int s : to.indices()) seen[s] = 1;
    while (!work.empty()) {
        const int s = work.front();
        work.pop_front();
        for (std::size_t i = 0; i < num_states(); ++i)
            if (!seen[i] && transitions_(i, s) != Possibility::zero()) {
                seen[i] = 1;
                work.push_back(static_cast<int>(i));
            }
    }
    std::vector<int> out;
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i]) out.push_back(static_cast<int>(i));
    return StateSet(std::move(out), num_states());
}

Possibility PossKripke::cylinder_possibility(const FinitePath& p) const {
    if (p.universe() != num_states())
        throw DimensionError("path belongs to a different structure");
    const auto& ids = p.state_indices();
    Possibility value = init_[ids.front()];
    for (std::size_t i = 0; i + 1 < ids.size(); ++i)
        value = meet(value, transitions_(ids[i], ids[i + 1]));
    return value;
}

Possibility PossKripke::path_set_possibility(std::span<const FinitePath> paths) const {
    Possibility value = Possibility::zero();
    for (const auto& p : paths) value = join(value, cylinder_possibility(p));
    return value;
}

PossKripke PossKripke::rebase_initial(std::string_view state) const {
    const int s = state_index(state);
    std::vector<Possibility> init(num_states());
    init[s] = Possibility::one();
    PossKripke out = *this;
    out.init_ = FuzzyVector(states_, std::move(init));
    return out;
}

bool PossKripke::operator==(const PossKripke& other) const {
    return states_ == other.states_ && transitions_ == other.transitions_ &&
           init_ == other.init_ && atomic_props_ == other.atomic_props_ &&
           labels_ == other.labels_;
}

}  // namespace posmc
