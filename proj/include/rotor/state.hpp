#pragma once

#include <cmath>
#include <stdexcept>

#include "rotor/rational.hpp"

namespace rotor {

/// One point of the 6-dimensional phase space. theta is stored unwrapped:
/// the rotor solution grows without bound and revolution counting needs the
/// continuous coordinate. Wrapping to [0, 2pi) is a display concern.
struct PhaseState {
    double x = 0, y = 0, theta = 0;
    double px = 0, py = 0, ptheta = 0;

    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(theta) &&
               std::isfinite(px) && std::isfinite(py) && std::isfinite(ptheta);
    }
};

/// Rational-coordinate state for the exact evaluation paths.
struct ExactState {
    Rational x{0}, y{0}, theta{0};
    Rational px{0}, py{0}, ptheta{0};

    PhaseState to_double() const {
        return {rotor::to_double(x), rotor::to_double(y), rotor::to_double(theta),
                rotor::to_double(px), rotor::to_double(py), rotor::to_double(ptheta)};
    }

    static ExactState from_double(const PhaseState& s) {
        // binary doubles are exact rationals
        return {Rational(s.x), Rational(s.y), Rational(s.theta),
                Rational(s.px), Rational(s.py), Rational(s.ptheta)};
    }
};

}  // namespace rotor
