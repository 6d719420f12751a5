// fixtures.hpp -- structures shared across the test suites

#pragma once

#include <vector>

#include <posmc/kripke.hpp>

namespace posmc::testing {

inline Possibility po(double v) { return Possibility(v); }

inline std::vector<Possibility> pvec(std::initializer_list<double> values) {
    std::vector<Possibility> out;
    for (double v : values) out.emplace_back(v);
    return out;
}

/// The four-state structure used throughout: s3 absorbing, s1/s2 on a 0.7
/// cycle, a weak 0.2 shortcut s0 -> s2.
inline PossKripke four_state() {
    RawKripke raw;
    raw.states = {"s0", "s1", "s2", "s3"};
    raw.init = {{"s0", 1.0}};
    raw.transitions = {{"s0", "s1", 1.0}, {"s0", "s2", 0.2}, {"s1", "s2", 1.0},
                       {"s1", "s3", 0.9}, {"s2", "s1", 0.7}, {"s2", "s3", 1.0},
                       {"s3", "s3", 1.0}};
    return PossKripke::validate(raw);
}

/// Two states: a sure self-loop on s1 with a 0.5 escape to the absorbing s2.
inline PossKripke two_state() {
    RawKripke raw;
    raw.states = {"s1", "s2"};
    raw.init = {{"s1", 1.0}};
    raw.transitions = {{"s1", "s1", 1.0}, {"s1", "s2", 0.5}, {"s2", "s2", 1.0}};
    return PossKripke::validate(raw);
}

/// The 3x3 until system extracted from four_state() with target {s3}.
inline FuzzyMatrix until_matrix() {
    return FuzzyMatrix({"s0", "s1", "s2"},
                       pvec({0, 1, 0.2,  //
                             0, 0, 1,    //
                             0, 0.7, 0}));
}

inline FuzzyVector until_vector() {
    return FuzzyVector({"s0", "s1", "s2"}, pvec({0, 0.9, 1}));
}

}  // namespace posmc::testing
