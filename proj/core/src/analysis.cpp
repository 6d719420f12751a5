#include "posmc/analysis.hpp"

#include <deque>

namespace posmc {

namespace {

void require_owned(const PossKripke& m, const StateSet& set, const char* what) {
    if (set.universe() != m.num_states())
        throw DimensionError(std::string(what) + ": state set belongs to a different structure");
}

PossibilityReport finalize(const PossKripke& m, std::vector<Possibility> per_state, Method method,
                           std::optional<int> iteration_count) {
    Possibility aggregate = Possibility::zero();
    for (std::size_t i = 0; i < per_state.size(); ++i)
        aggregate = join(aggregate, meet(m.init()[i], per_state[i]));
    return {m.states(), std::move(per_state), aggregate, method, iteration_count};
}

}  // namespace

std::string_view method_name(Method m) noexcept {
    switch (m) {
        case Method::closure_formula: return "closure_formula";
        case Method::fixed_point: return "fixed_point";
        case Method::bounded_iteration: return "bounded_iteration";
        case Method::repeated_closure: return "repeated_closure";
    }
    return "unknown";
}

Possibility PossibilityReport::at(std::string_view state) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == state) return per_state[i];
    throw UnknownStateError("unknown state '" + std::string(state) + "' in report");
}

PossibilityReport reach_via_closure(const PossKripke& m, const StateSet& target) {
    require_owned(m, target, "reach_via_closure");
    const FuzzyMatrix closure = transitive_closure(m.transitions());
    std::vector<Possibility> per_state(m.num_states());
    for (std::size_t s = 0; s < m.num_states(); ++s) {
        if (target.contains(static_cast<int>(s))) {
            per_state[s] = Possibility::one();
            continue;
        }
        for (int t : target.indices()) per_state[s] = join(per_state[s], closure(s, t));
    }
    return finalize(m, std::move(per_state), Method::closure_formula, std::nullopt);
}

UntilPartition build_partition(const PossKripke& m, const StateSet& constraint,
                               const StateSet& target) {
    require_owned(m, constraint, "build_partition");
    require_owned(m, target, "build_partition");
    const std::size_t n = m.num_states();
    // Backward search from the target through constraint states over
    // positive transitions: the marked states are exactly those with some
    // target-reaching path whose interior stays in the constraint set.
    std::vector<char> marked(n, 0);
    std::deque<int> work(target.indices().begin(), target.indices().end());
    for (int t : target.indices()) marked[t] = 1;
    while (!work.empty()) {
        const int t = work.front();
        work.pop_front();
        for (std::size_t s = 0; s < n; ++s)
            if (!marked[s] && constraint.contains(static_cast<int>(s)) &&
                m.transitions()(s, t) != Possibility::zero()) {
                marked[s] = 1;
                work.push_back(static_cast<int>(s));
            }
    }
    std::vector<int> zero_ids;
    std::vector<int> query_ids;
    for (std::size_t s = 0; s < n; ++s) {
        if (!marked[s])
            zero_ids.push_back(static_cast<int>(s));
        else if (!target.contains(static_cast<int>(s)))
            query_ids.push_back(static_cast<int>(s));
    }
    return {StateSet(std::move(zero_ids), n), target, StateSet(std::move(query_ids), n)};
}

namespace {

struct UntilSystem {
    FuzzyMatrix matrix;
    FuzzyVector vector;
};

// A restricts the transition matrix to the query block; b(s) is the degree
// of stepping from s directly into the target.
UntilSystem until_system(const PossKripke& m, const UntilPartition& part) {
    const auto& query = part.s_query.indices();
    std::vector<std::string> labels;
    for (int s : query) labels.push_back(m.states()[s]);
    std::vector<Possibility> a(query.size() * query.size());
    std::vector<Possibility> b(query.size());
    for (std::size_t i = 0; i < query.size(); ++i) {
        for (std::size_t j = 0; j < query.size(); ++j)
            a[i * query.size() + j] = m.transitions()(query[i], query[j]);
        for (int t : part.s_one.indices())
            b[i] = join(b[i], m.transitions()(query[i], t));
    }
    return {FuzzyMatrix(labels, std::move(a)), FuzzyVector(labels, std::move(b))};
}

std::vector<Possibility> assemble(const PossKripke& m, const UntilPartition& part,
                                  const FuzzyVector& query_values) {
    std::vector<Possibility> per_state(m.num_states());
    for (int s : part.s_one.indices()) per_state[s] = Possibility::one();
    const auto& query = part.s_query.indices();
    for (std::size_t i = 0; i < query.size(); ++i) per_state[query[i]] = query_values[i];
    return per_state;
}

}  // namespace

PossibilityReport until_possibility(const PossKripke& m, const StateSet& constraint,
                                    const StateSet& target) {
    const UntilPartition part = build_partition(m, constraint, target);
    const UntilSystem sys = until_system(m, part);
    FixedPointResult fp = least_fixed_point(sys.matrix, sys.vector);
    return finalize(m, assemble(m, part, fp.vector), Method::fixed_point, fp.iterations);
}

PossibilityReport bounded_until_possibility(const PossKripke& m, const StateSet& constraint,
                                            const StateSet& target, int bound) {
    if (bound < 0) throw Error("bounded_until_possibility: negative bound");
    const UntilPartition part = build_partition(m, constraint, target);
    const UntilSystem sys = until_system(m, part);
    FuzzyVector x = FuzzyVector::zeros(sys.vector.labels());
    int applied = 0;
    for (int k = 0; k < bound; ++k) {
        FuzzyVector next = join(apply(sys.matrix, x), sys.vector);
        if (next == x) break;  // stable for every larger bound
        x = std::move(next);
        ++applied;
    }
    return finalize(m, assemble(m, part, x), Method::bounded_iteration, applied);
}

PossibilityReport repeated_reach_possibility(const PossKripke& m, const StateSet& target) {
    require_owned(m, target, "repeated_reach_possibility");
    const FuzzyMatrix closure = transitive_closure(m.transitions());
    std::vector<Possibility> per_state(m.num_states());
    for (std::size_t s = 0; s < m.num_states(); ++s)
        for (int a : target.indices())
            per_state[s] = join(per_state[s], meet(closure(s, a), closure(a, a)));
    return finalize(m, std::move(per_state), Method::repeated_closure, std::nullopt);
}

}  // namespace posmc
