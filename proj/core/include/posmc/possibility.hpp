// possibility.hpp -- possibility degrees: the [0,1] lattice under min/max

#pragma once

#include <compare>
#include <string>

#include "posmc/errors.hpp"

namespace posmc {

/// A possibility degree in [0,1].
///
/// The only operations ever applied are the lattice join (max) and meet
/// (min), so every derived degree is bit-identical to one of the inputs, 0,
/// or 1. All comparisons are exact; there is no epsilon anywhere.
class Possibility {
public:
    constexpr Possibility() noexcept : v_(0.0) {}

    explicit Possibility(double v) : v_(v) {
        if (!(v >= 0.0 && v <= 1.0))  // also rejects NaN
            throw ValidationError("possibility value outside [0,1]: " + std::to_string(v));
        if (v == 0.0) v_ = 0.0;  // normalize -0.0
    }

    static constexpr Possibility zero() noexcept { return Possibility{}; }
    static constexpr Possibility one() noexcept {
        Possibility p;
        p.v_ = 1.0;
        return p;
    }

    constexpr double value() const noexcept { return v_; }

    friend constexpr bool operator==(Possibility, Possibility) noexcept = default;
    friend constexpr auto operator<=>(Possibility, Possibility) noexcept = default;

private:
    double v_;
};

constexpr Possibility join(Possibility a, Possibility b) noexcept { return a < b ? b : a; }
constexpr Possibility meet(Possibility a, Possibility b) noexcept { return b < a ? b : a; }

}  // namespace posmc
