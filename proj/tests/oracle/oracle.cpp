#include "oracle/oracle.hpp"

#include <algorithm>

#include <posmc/fuzzy.hpp>

namespace posmc::oracle {

namespace {

void check_size(const PossKripke& m) {
    if (m.num_states() > kMaxStates)
        throw InstanceTooLargeError("oracle instances are limited to " +
                                    std::to_string(kMaxStates) + " states");
}

std::vector<char> member_mask(const StateSet& set, std::size_t n) {
    std::vector<char> mask(n, 0);
    for (int i : set.indices()) mask[i] = 1;
    return mask;
}

// Depth-first join over simple paths. A branch whose running minimum is
// already <= the best value found cannot improve a join of minima, so it is
// cut; this changes nothing about the result.
struct PathSearch {
    const FuzzyMatrix& p;
    const std::vector<char>& target;
    const std::vector<char>& useful;  // states that can still reach the target
    std::vector<char> on_path;
    Possibility best = Possibility::zero();

    void walk(int u, Possibility running) {
        const std::size_t n = p.dim();
        for (std::size_t v = 0; v < n; ++v) {
            const Possibility step = p(u, v);
            if (step == Possibility::zero() || !useful[v]) continue;
            const Possibility value = meet(running, step);
            if (!(best < value)) continue;
            if (target[v]) {
                best = value;
                continue;
            }
            if (on_path[v]) continue;
            on_path[v] = 1;
            walk(static_cast<int>(v), value);
            on_path[v] = 0;
        }
    }
};

Possibility best_simple_path(const PossKripke& m, int from, int to) {
    if (from == to) return Possibility::one();  // empty stem
    std::vector<char> target(m.num_states(), 0);
    target[to] = 1;
    const auto useful = member_mask(m.pre_star(StateSet({to}, m.num_states())), m.num_states());
    if (!useful[from]) return Possibility::zero();
    PathSearch search{m.transitions(), target, useful, std::vector<char>(m.num_states(), 0)};
    search.on_path[from] = 1;
    search.walk(from, Possibility::one());
    return search.best;
}

// Best min over simple cycles through `anchor` (closing edge included).
Possibility best_simple_cycle(const PossKripke& m, int anchor) {
    const auto useful =
        member_mask(m.pre_star(StateSet({anchor}, m.num_states())), m.num_states());
    struct CycleSearch {
        const FuzzyMatrix& p;
        const std::vector<char>& useful;
        int anchor;
        std::vector<char> on_path;
        Possibility best = Possibility::zero();

        void walk(int u, Possibility running) {
            const std::size_t n = p.dim();
            for (std::size_t v = 0; v < n; ++v) {
                const Possibility step = p(u, v);
                if (step == Possibility::zero() || !useful[v]) continue;
                const Possibility value = meet(running, step);
                if (!(best < value)) continue;
                if (static_cast<int>(v) == anchor) {
                    best = value;
                    continue;
                }
                if (on_path[v]) continue;
                on_path[v] = 1;
                walk(static_cast<int>(v), value);
                on_path[v] = 0;
            }
        }
    };
    CycleSearch search{m.transitions(), useful, anchor, std::vector<char>(m.num_states(), 0)};
    search.on_path[anchor] = 1;
    search.walk(anchor, Possibility::one());
    return search.best;
}

}  // namespace

Possibility enumerate_reach(const PossKripke& m, const StateSet& target, std::string_view from) {
    check_size(m);
    const int s = m.state_index(from);
    if (target.contains(s)) return Possibility::one();
    const auto target_mask = member_mask(target, m.num_states());
    const auto useful = member_mask(m.pre_star(target), m.num_states());
    if (!useful[s]) return Possibility::zero();
    PathSearch search{m.transitions(), target_mask, useful,
                      std::vector<char>(m.num_states(), 0)};
    search.on_path[s] = 1;
    search.walk(s, Possibility::one());
    return search.best;
}

Possibility enumerate_until(const PossKripke& m, const StateSet& constraint,
                            const StateSet& target, std::string_view from,
                            std::optional<int> bound) {
    check_size(m);
    const int s = m.state_index(from);
    if (target.contains(s)) return Possibility::one();  // zero-step witness
    if (!constraint.contains(s)) return Possibility::zero();
    const int max_edges = bound.value_or(static_cast<int>(m.num_states()));
    const auto target_mask = member_mask(target, m.num_states());
    const auto constraint_mask = member_mask(constraint, m.num_states());

    struct BoundedSearch {
        const FuzzyMatrix& p;
        const std::vector<char>& target;
        const std::vector<char>& constraint;
        std::vector<char> on_path;
        Possibility best = Possibility::zero();

        void walk(int u, int edges_left, Possibility running) {
            if (edges_left == 0) return;
            const std::size_t n = p.dim();
            for (std::size_t v = 0; v < n; ++v) {
                const Possibility step = p(u, v);
                if (step == Possibility::zero()) continue;
                const Possibility value = meet(running, step);
                if (!(best < value)) continue;
                if (target[v]) {
                    best = value;
                    continue;
                }
                if (!constraint[v] || on_path[v]) continue;
                on_path[v] = 1;
                walk(static_cast<int>(v), edges_left - 1, value);
                on_path[v] = 0;
            }
        }
    };
    BoundedSearch search{m.transitions(), target_mask, constraint_mask,
                         std::vector<char>(m.num_states(), 0)};
    search.on_path[s] = 1;
    search.walk(s, max_edges, Possibility::one());
    return search.best;
}

Possibility enumerate_repeated(const PossKripke& m, const StateSet& target,
                               std::string_view from) {
    check_size(m);
    const int s = m.state_index(from);
    Possibility best = Possibility::zero();
    for (int anchor : target.indices()) {
        const Possibility stem = best_simple_path(m, s, anchor);
        if (stem == Possibility::zero()) continue;
        const Possibility cycle = best_simple_cycle(m, anchor);
        best = join(best, meet(stem, cycle));
    }
    return best;
}

bool strongly_connected(const PossKripke& m, const StateSet& subset) {
    if (subset.empty()) return false;
    const auto members = subset.indices();
    for (int u : members) {
        // Forward search from the successors of u, staying inside the subset;
        // every member (including u itself) must be hit by a nonempty path.
        std::vector<char> seen(m.num_states(), 0);
        std::vector<int> work;
        for (int v : members)
            if (m.transitions()(u, v) != Possibility::zero() && !seen[v]) {
                seen[v] = 1;
                work.push_back(v);
            }
        while (!work.empty()) {
            const int x = work.back();
            work.pop_back();
            for (int v : members)
                if (!seen[v] && m.transitions()(x, v) != Possibility::zero()) {
                    seen[v] = 1;
                    work.push_back(v);
                }
        }
        for (int v : members)
            if (!seen[v]) return false;
    }
    return true;
}

Possibility subset_cycle_possibility(const PossKripke& m, const StateSet& subset,
                                     std::string_view from, std::string_view anchor) {
    check_size(m);
    if (subset.size() > kMaxSubset)
        throw InstanceTooLargeError("subsets are limited to " + std::to_string(kMaxSubset) +
                                    " states");
    const int s = m.state_index(from);
    const int a = m.state_index(anchor);
    if (!subset.contains(a)) throw Error("anchor state is not in the subset");
    if (!strongly_connected(m, subset)) throw Error("subset is not strongly connected");

    const FuzzyMatrix closure = transitive_closure(m.transitions());
    std::vector<int> perm = subset.indices();
    Possibility best = Possibility::zero();
    do {
        Possibility value = closure(s, perm.front());
        for (std::size_t i = 0; i + 1 < perm.size(); ++i)
            value = meet(value, closure(perm[i], perm[i + 1]));
        value = meet(value, closure(perm.back(), perm.front()));
        best = join(best, value);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Possibility enumerate_good_prefix(const PossKripke& m, const FiniteAutomaton& nfa,
                                  std::string_view from) {
    if (nfa.kind() != FiniteAutomaton::Kind::nfa)
        throw AutomatonError("good-prefix enumeration takes an nfa");
    const std::size_t nq = nfa.states().size();
    if (m.num_states() * nq > kMaxStates)
        throw InstanceTooLargeError("good-prefix instances are limited to " +
                                    std::to_string(kMaxStates) + " product states");

    std::vector<std::uint64_t> label_mask(m.num_states());
    for (std::size_t i = 0; i < m.num_states(); ++i)
        label_mask[i] = nfa.symbol_mask(m.label_names(static_cast<int>(i)));
    std::uint32_t accepting_mask = 0;
    for (int q : nfa.accepting()) accepting_mask |= std::uint32_t{1} << q;

    const int s = m.state_index(from);
    std::uint32_t entry = 0;
    for (int q0 : nfa.initial())
        for (int q : nfa.successors(q0, label_mask[s])) entry |= std::uint32_t{1} << q;

    struct TraceSearch {
        const PossKripke& m;
        const FiniteAutomaton& nfa;
        const std::vector<std::uint64_t>& label_mask;
        std::uint32_t accepting_mask;
        Possibility best = Possibility::zero();

        void walk(int u, std::uint32_t states, int edges_left, Possibility running) {
            if (states & accepting_mask) best = join(best, running);
            if (edges_left == 0 || states == 0) return;
            for (std::size_t v = 0; v < m.num_states(); ++v) {
                const Possibility step = m.transitions()(u, v);
                if (step == Possibility::zero()) continue;
                const Possibility value = meet(running, step);
                if (!(best < value)) continue;
                std::uint32_t next = 0;
                for (std::size_t q = 0; q < nfa.states().size(); ++q)
                    if (states & (std::uint32_t{1} << q))
                        for (int t : nfa.successors(static_cast<int>(q), label_mask[v]))
                            next |= std::uint32_t{1} << t;
                if (next) walk(static_cast<int>(v), next, edges_left - 1, value);
            }
        }
    };
    TraceSearch search{m, nfa, label_mask, accepting_mask};
    search.walk(s, entry, static_cast<int>(m.num_states() * nq), Possibility::one());
    return search.best;
}

}  // namespace posmc::oracle
