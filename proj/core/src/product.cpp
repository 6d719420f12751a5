#include "posmc/product.hpp"

#include <algorithm>
#include <set>

namespace posmc {

namespace {

// Label of each model state as a bitmask over the automaton alphabet.
std::vector<std::uint64_t> label_masks(const PossKripke& m, const FiniteAutomaton& a) {
    std::vector<std::uint64_t> masks(m.num_states());
    for (std::size_t s = 0; s < m.num_states(); ++s) {
        const auto names = m.label_names(static_cast<int>(s));
        try {
            masks[s] = a.symbol_mask(names);
        } catch (const AutomatonError& e) {
            throw AutomatonError("alphabet mismatch at state '" + m.states()[s] +
                                 "': " + e.what());
        }
    }
    return masks;
}

// Automaton states reachable from an initial one by reading L(s).
std::vector<int> entry_states(const FiniteAutomaton& a, std::uint64_t label_mask) {
    std::set<int> entries;
    for (int q0 : a.initial())
        for (int q : a.successors(q0, label_mask)) entries.insert(q);
    return {entries.begin(), entries.end()};
}

}  // namespace

ProductStructure product(const PossKripke& m, const FiniteAutomaton& a, std::string model_ref,
                         std::string automaton_ref) {
    if (!a.is_complete())
        throw AutomatonError("product requires a complete automaton (use complete() first)");
    const auto masks = label_masks(m, a);

    const std::size_t ns = m.num_states();
    const std::size_t nq = a.states().size();
    const std::size_t n = ns * nq;

    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t q = 0; q < nq; ++q) names.push_back(m.states()[s] + "|" + a.states()[q]);

    std::vector<Possibility> entries(n * n);
    for (std::size_t s = 0; s < ns; ++s)
        for (std::size_t t = 0; t < ns; ++t) {
            const Possibility p = m.transitions()(s, t);
            if (p == Possibility::zero()) continue;
            for (std::size_t q = 0; q < nq; ++q)
                for (int q2 : a.successors(static_cast<int>(q), masks[t]))
                    entries[(s * nq + q) * n + (t * nq + q2)] = p;
        }

    std::vector<Possibility> init(n);
    for (std::size_t s = 0; s < ns; ++s)
        for (int q : entry_states(a, masks[s])) init[s * nq + q] = m.init()[s];

    std::vector<int> goal_ids;
    for (std::size_t s = 0; s < ns; ++s)
        for (int q : a.accepting()) goal_ids.push_back(static_cast<int>(s * nq + q));

    PossKripke structure = PossKripke::from_matrix(names, FuzzyMatrix(names, std::move(entries)),
                                                   FuzzyVector(names, std::move(init)));
    return {std::move(structure), StateSet(std::move(goal_ids), n), std::move(model_ref),
            std::move(automaton_ref), ns, nq};
}

namespace {

// Join of the product's per-state values over the entry pairs of each model
// state, aggregated against the model's own initial distribution.
PossibilityReport project_report(const PossKripke& m, const FiniteAutomaton& a,
                                 const ProductStructure& prod, const PossibilityReport& inner,
                                 Method method) {
    const auto masks = label_masks(m, a);
    std::vector<Possibility> per_state(m.num_states());
    for (std::size_t s = 0; s < m.num_states(); ++s)
        for (int q : entry_states(a, masks[s]))
            per_state[s] =
                join(per_state[s], inner.per_state[prod.pair_index(static_cast<int>(s), q)]);
    Possibility aggregate = Possibility::zero();
    for (std::size_t s = 0; s < m.num_states(); ++s)
        aggregate = join(aggregate, meet(m.init()[s], per_state[s]));
    return {m.states(), std::move(per_state), aggregate, method, std::nullopt};
}

}  // namespace

PossibilityReport check_safety(const PossKripke& m, const FiniteAutomaton& a) {
    if (a.kind() != FiniteAutomaton::Kind::nfa)
        throw AutomatonError("safety checking takes an nfa");
    const FiniteAutomaton ac = complete(a);
    const ProductStructure prod = product(m, ac);
    const PossibilityReport inner = reach_via_closure(prod.structure, prod.goal);
    return project_report(m, ac, prod, inner, Method::closure_formula);
}

PossibilityReport check_omega(const PossKripke& m, const FiniteAutomaton& a) {
    if (a.kind() != FiniteAutomaton::Kind::nba)
        throw AutomatonError("omega checking takes an nba");
    const FiniteAutomaton ac = complete(a);
    const ProductStructure prod = product(m, ac);
    const PossibilityReport inner = repeated_reach_possibility(prod.structure, prod.goal);
    return project_report(m, ac, prod, inner, Method::repeated_closure);
}

}  // namespace posmc
