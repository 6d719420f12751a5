#include "posmc/automaton.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace posmc {

namespace {

// complete() materializes one successor entry per missing symbol, so the
// alphabet must stay enumerable.
constexpr std::size_t kMaxCompletableAlphabet = 16;

const std::vector<int> kNoSuccessors{};

}  // namespace

FiniteAutomaton FiniteAutomaton::make(
    Kind kind, std::vector<std::string> states, std::vector<std::string> alphabet,
    const std::vector<std::tuple<std::string, Symbol, std::string>>& transitions,
    const std::vector<std::string>& initial, const std::vector<std::string>& accepting) {
    FiniteAutomaton a;
    a.kind_ = kind;
    a.states_ = std::move(states);
    a.alphabet_ = std::move(alphabet);

    if (a.states_.empty()) throw AutomatonError("an automaton needs at least one state");
    if (a.alphabet_.size() >= 64) throw AutomatonError("alphabet too large (at most 63 propositions)");

    std::map<std::string, int, std::less<>> state_index;
    for (std::size_t i = 0; i < a.states_.size(); ++i)
        if (!state_index.emplace(a.states_[i], static_cast<int>(i)).second)
            throw AutomatonError("duplicate automaton state '" + a.states_[i] + "'");
    std::map<std::string, int, std::less<>> prop_index;
    for (std::size_t i = 0; i < a.alphabet_.size(); ++i)
        if (!prop_index.emplace(a.alphabet_[i], static_cast<int>(i)).second)
            throw AutomatonError("duplicate proposition '" + a.alphabet_[i] + "'");

    auto state_of = [&](const std::string& name) {
        auto it = state_index.find(name);
        if (it == state_index.end())
            throw AutomatonError("unknown automaton state '" + name + "'");
        return it->second;
    };

    a.delta_.resize(a.states_.size());
    for (const auto& [src, symbol, dst] : transitions) {
        const int s = state_of(src);
        const int t = state_of(dst);
        std::uint64_t mask = 0;
        for (const auto& prop : symbol) {
            auto it = prop_index.find(prop);
            if (it == prop_index.end())
                throw AutomatonError("symbol references unknown proposition '" + prop + "'");
            const std::uint64_t bit = std::uint64_t{1} << it->second;
            if (mask & bit) throw AutomatonError("symbol repeats proposition '" + prop + "'");
            mask |= bit;
        }
        auto& succs = a.delta_[s][mask];
        if (!std::binary_search(succs.begin(), succs.end(), t))
            succs.insert(std::lower_bound(succs.begin(), succs.end(), t), t);
    }

    if (initial.empty()) throw AutomatonError("empty initial state set");
    std::set<int> init_set;
    for (const auto& name : initial) init_set.insert(state_of(name));
    a.initial_.assign(init_set.begin(), init_set.end());
    std::set<int> acc_set;
    for (const auto& name : accepting) acc_set.insert(state_of(name));
    a.accepting_.assign(acc_set.begin(), acc_set.end());
    return a;
}

bool FiniteAutomaton::is_accepting(int state) const noexcept {
    return std::binary_search(accepting_.begin(), accepting_.end(), state);
}

std::uint64_t FiniteAutomaton::symbol_mask(std::span<const std::string> props) const {
    std::uint64_t mask = 0;
    for (const auto& prop : props) {
        auto it = std::find(alphabet_.begin(), alphabet_.end(), prop);
        if (it == alphabet_.end())
            throw AutomatonError("symbol references unknown proposition '" + prop + "'");
        const std::uint64_t bit = std::uint64_t{1} << (it - alphabet_.begin());
        if (mask & bit) throw AutomatonError("symbol repeats proposition '" + prop + "'");
        mask |= bit;
    }
    return mask;
}

Symbol FiniteAutomaton::mask_symbol(std::uint64_t mask) const {
    Symbol out;
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) out.push_back(alphabet_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<int>& FiniteAutomaton::successors(int state, std::uint64_t symbol) const {
    const auto& row = delta_.at(static_cast<std::size_t>(state));
    auto it = row.find(symbol);
    return it == row.end() ? kNoSuccessors : it->second;
}

std::vector<std::tuple<int, std::uint64_t, int>> FiniteAutomaton::transition_triples() const {
    std::vector<std::tuple<int, std::uint64_t, int>> out;
    for (std::size_t s = 0; s < delta_.size(); ++s)
        for (const auto& [mask, succs] : delta_[s])
            for (int t : succs) out.emplace_back(static_cast<int>(s), mask, t);
    return out;
}

bool FiniteAutomaton::is_complete() const {
    // Successor lists are never stored empty, so it suffices to count the
    // defined symbols per state.
    for (const auto& row : delta_)
        if (row.size() != symbol_count()) return false;
    return true;
}

FiniteAutomaton complete(const FiniteAutomaton& a) {
    if (a.is_complete()) return a;
    if (a.alphabet().size() > kMaxCompletableAlphabet)
        throw AutomatonError("completion over more than " +
                             std::to_string(kMaxCompletableAlphabet) +
                             " propositions is not supported");
    std::string trap = "q_trap";
    while (std::find(a.states_.begin(), a.states_.end(), trap) != a.states_.end())
        trap += "_";
    FiniteAutomaton out = a;
    out.states_.push_back(trap);
    const int trap_id = static_cast<int>(out.states_.size()) - 1;
    out.delta_.emplace_back();
    for (std::size_t s = 0; s < out.states_.size(); ++s)
        for (std::uint64_t mask = 0; mask < out.symbol_count(); ++mask) {
            auto& succs = out.delta_[s][mask];
            if (succs.empty()) succs.push_back(trap_id);
        }
    return out;
}

bool accepts_finite_masks(const FiniteAutomaton& a, std::span<const std::uint64_t> word) {
    if (a.kind() != FiniteAutomaton::Kind::nfa)
        throw AutomatonError("finite-word acceptance is defined for kind nfa");
    std::vector<char> current(a.states().size(), 0);
    for (int q : a.initial()) current[q] = 1;
    for (std::uint64_t symbol : word) {
        if (symbol >= a.symbol_count())
            throw AutomatonError("symbol outside the alphabet power set");
        std::vector<char> next(a.states().size(), 0);
        for (std::size_t q = 0; q < current.size(); ++q)
            if (current[q])
                for (int t : a.successors(static_cast<int>(q), symbol)) next[t] = 1;
        current = std::move(next);
    }
    for (int q : a.accepting())
        if (current[q]) return true;
    return false;
}

bool accepts_finite(const FiniteAutomaton& a, std::span<const Symbol> word) {
    std::vector<std::uint64_t> masks;
    masks.reserve(word.size());
    for (const auto& symbol : word) masks.push_back(a.symbol_mask(symbol));
    return accepts_finite_masks(a, masks);
}

}  // namespace posmc
