// bench_core.cpp -- closure, fixed point, and product timings on synthetic
// structures of growing size

#include <random>

#include <benchmark/benchmark.h>
#include <posmc/analysis.hpp>
#include <posmc/product.hpp>

namespace {

using namespace posmc;

constexpr double kGrid[] = {0.0, 0.2, 0.5, 0.7, 0.9, 1.0};

std::vector<std::string> names(int n) {
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) out.push_back("s" + std::to_string(i));
    return out;
}

FuzzyMatrix random_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, 5);
    std::vector<Possibility> entries;
    entries.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n * n; ++i) entries.emplace_back(kGrid[pick(rng)]);
    return FuzzyMatrix(names(n), std::move(entries));
}

PossKripke random_model(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, 5);
    std::uniform_int_distribution<int> col(0, n - 1);
    RawKripke raw;
    raw.states = names(n);
    for (int i = 0; i < n; ++i) {
        std::vector<double> row(n, 0.0);
        for (int j = 0; j < n; ++j)
            if (pick(rng) < 3) row[j] = kGrid[pick(rng)];
        row[col(rng)] = 1.0;
        for (int j = 0; j < n; ++j)
            if (row[j] != 0.0) raw.transitions.emplace_back(raw.states[i], raw.states[j], row[j]);
    }
    raw.init.emplace_back(raw.states[0], 1.0);
    return PossKripke::validate(raw);
}

FiniteAutomaton two_state_nba(const std::vector<std::string>& alphabet) {
    std::vector<std::tuple<std::string, Symbol, std::string>> transitions;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << alphabet.size()); ++mask) {
        Symbol symbol;
        for (std::size_t i = 0; i < alphabet.size(); ++i)
            if (mask & (std::uint64_t{1} << i)) symbol.push_back(alphabet[i]);
        transitions.emplace_back("q0", symbol, mask % 2 ? "q1" : "q0");
        transitions.emplace_back("q1", symbol, "q0");
    }
    return FiniteAutomaton::make(FiniteAutomaton::Kind::nba, {"q0", "q1"}, alphabet, transitions,
                                 {"q0"}, {"q1"});
}

void BM_compose(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FuzzyMatrix a = random_matrix(n, 1);
    const FuzzyMatrix b = random_matrix(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_compose)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_transitive_closure(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FuzzyMatrix p = random_matrix(n, 3);
    for (auto _ : state) benchmark::DoNotOptimize(transitive_closure(p));
}
BENCHMARK(BM_transitive_closure)->Arg(16)->Arg(32)->Arg(64)->Arg(128);

void BM_closure_naive(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FuzzyMatrix p = random_matrix(n, 3);
    for (auto _ : state) {
        FuzzyMatrix acc = p;
        FuzzyMatrix power = p;
        for (int i = 2; i <= n; ++i) {
            power = compose(power, p);
            acc = join(acc, power);
        }
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_closure_naive)->Arg(16)->Arg(32)->Arg(64);

void BM_least_fixed_point(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const FuzzyMatrix a = random_matrix(n, 4);
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(0, 5);
    std::vector<Possibility> entries;
    for (int i = 0; i < n; ++i) entries.emplace_back(kGrid[pick(rng)]);
    const FuzzyVector b(a.labels(), std::move(entries));
    for (auto _ : state) benchmark::DoNotOptimize(least_fixed_point(a, b));
}
BENCHMARK(BM_least_fixed_point)->Arg(16)->Arg(64)->Arg(256);

void BM_repeated_reach(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PossKripke m = random_model(n, 6);
    std::vector<int> half;
    for (int i = 0; i < n; i += 2) half.push_back(i);
    const StateSet target(std::move(half), m.num_states());
    for (auto _ : state) benchmark::DoNotOptimize(repeated_reach_possibility(m, target));
}
BENCHMARK(BM_repeated_reach)->Arg(16)->Arg(32)->Arg(64);

// Same transition structure relabeled over two propositions, so the product
// alphabet stays small as the state count grows.
PossKripke random_labeled_model(int n, unsigned seed) {
    const PossKripke base = random_model(n, seed);
    std::mt19937 rng(seed + 17);
    std::uniform_int_distribution<int> coin(0, 1);
    RawKripke raw;
    raw.states = base.states();
    raw.init.emplace_back(raw.states[0], 1.0);
    for (std::size_t i = 0; i < base.num_states(); ++i)
        for (std::size_t j = 0; j < base.num_states(); ++j)
            if (base.transitions()(i, j) != Possibility::zero())
                raw.transitions.emplace_back(raw.states[i], raw.states[j],
                                             base.transitions()(i, j).value());
    raw.atomic_props = {{"a", "b"}};
    for (const auto& s : raw.states) {
        std::vector<std::string> label;
        if (coin(rng)) label.push_back("a");
        if (coin(rng)) label.push_back("b");
        raw.labels.emplace_back(s, std::move(label));
    }
    return PossKripke::validate(raw);
}

void BM_check_omega(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const PossKripke m = random_labeled_model(n, 7);
    const FiniteAutomaton a = complete(two_state_nba({"a", "b"}));
    for (auto _ : state) benchmark::DoNotOptimize(check_omega(m, a));
}
BENCHMARK(BM_check_omega)->Arg(8)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
