#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "rotor/rational.hpp"
#include "rotor/state.hpp"

namespace rotor {

/// Evaluation hit a singular point of the potential (e.g. x = 0 for V_I).
struct SingularEvaluation : std::runtime_error {
    explicit SingularEvaluation(const std::string& what) : std::runtime_error(what) {}
};

/// Physical parameters. The oscillator is parameterized by omega directly
/// (omega = sqrt(k/M)); keeping omega rational keeps every algebra
/// coefficient rational.
struct Parameters {
    Rational mass{1};
    Rational omega{1};
    Rational inertia{Rational(1, 12)};
    Rational gravity{0};
    Rational omega_x{1}, omega_y{1};  // anisotropic variant only

    void validate() const {
        if (mass <= 0) throw std::invalid_argument("mass must be positive");
        if (omega <= 0) throw std::invalid_argument("omega must be positive");
        if (inertia <= 0) throw std::invalid_argument("inertia must be positive");
        if (gravity < 0) throw std::invalid_argument("gravity must be nonnegative");
        if (omega_x <= 0 || omega_y <= 0) throw std::invalid_argument("anisotropic frequencies must be positive");
    }

    double mass_d() const { return to_double(mass); }
    double omega_d() const { return to_double(omega); }
    double inertia_d() const { return to_double(inertia); }
    double gravity_d() const { return to_double(gravity); }
};

/// I = M L^2 / 12 for a homogeneous rod.
inline Rational rod_inertia(const Rational& mass, const Rational& rod_length) {
    if (mass <= 0) throw std::invalid_argument("rod mass must be positive");
    if (rod_length <= 0) throw std::invalid_argument("rod length must be positive");
    return mass * rod_length * rod_length / 12;
}

enum class PotentialKind {
    Isotropic,           // (M omega^2 / 2)(x^2 + y^2)
    OscillatorGravity,   // isotropic + M g y
    Anisotropic,         // (M/2)(omega_x^2 x^2 + omega_y^2 y^2)
    SW_I,                // alpha(x^2+y^2) + beta/x^2 + gamma/y^2
    SW_II,               // alpha(x^2+4y^2) + beta/x^2 + gamma y
    SW_III,              // alpha/r + (beta/cos^2(phi/2) + gamma/sin^2(phi/2))/r^2
    SW_IV                // alpha/r + (beta cos(phi/2) + gamma sin(phi/2))/sqrt(r)
};

inline const char* potential_name(PotentialKind k) {
    switch (k) {
        case PotentialKind::Isotropic: return "isotropic";
        case PotentialKind::OscillatorGravity: return "gravity";
        case PotentialKind::Anisotropic: return "anisotropic";
        case PotentialKind::SW_I: return "sw1";
        case PotentialKind::SW_II: return "sw2";
        case PotentialKind::SW_III: return "sw3";
        case PotentialKind::SW_IV: return "sw4";
    }
    return "?";
}

struct PotentialSpec {
    PotentialKind kind = PotentialKind::Isotropic;
    double alpha = 0, beta = 0, gamma = 0;  // SW families only

    static PotentialSpec isotropic() { return {PotentialKind::Isotropic}; }
    static PotentialSpec gravity() { return {PotentialKind::OscillatorGravity}; }
    static PotentialSpec anisotropic() { return {PotentialKind::Anisotropic}; }
    static PotentialSpec sw(PotentialKind k, double a, double b, double c) { return {k, a, b, c}; }

    bool oscillator_family() const {
        return kind == PotentialKind::Isotropic || kind == PotentialKind::OscillatorGravity ||
               kind == PotentialKind::Anisotropic;
    }
};

namespace detail {

struct Polar {
    double r, half_phi, s_half, c_half;
};

inline Polar polar_of(double x, double y) {
    double r = std::hypot(x, y);
    if (r == 0) throw SingularEvaluation("r = 0: radial potential undefined at the origin");
    double phi = std::atan2(y, x);
    if (phi < 0) phi += 2 * M_PI;  // phi in [0, 2pi), half-angle in [0, pi)
    double h = phi / 2;
    return {r, h, std::sin(h), std::cos(h)};
}

}  // namespace detail

inline double potential_value(const PotentialSpec& pot, const Parameters& p, double x, double y) {
    const double M = p.mass_d();
    switch (pot.kind) {
        case PotentialKind::Isotropic: {
            double w = p.omega_d();
            return 0.5 * M * w * w * (x * x + y * y);
        }
        case PotentialKind::OscillatorGravity: {
            double w = p.omega_d();
            return 0.5 * M * w * w * (x * x + y * y) + M * p.gravity_d() * y;
        }
        case PotentialKind::Anisotropic: {
            double wx = to_double(p.omega_x), wy = to_double(p.omega_y);
            return 0.5 * M * (wx * wx * x * x + wy * wy * y * y);
        }
        case PotentialKind::SW_I:
            if (x == 0) throw SingularEvaluation("x = 0: singular point of V_I");
            if (y == 0) throw SingularEvaluation("y = 0: singular point of V_I");
            return pot.alpha * (x * x + y * y) + pot.beta / (x * x) + pot.gamma / (y * y);
        case PotentialKind::SW_II:
            if (x == 0) throw SingularEvaluation("x = 0: singular point of V_II");
            return pot.alpha * (x * x + 4 * y * y) + pot.beta / (x * x) + pot.gamma * y;
        case PotentialKind::SW_III: {
            auto pc = detail::polar_of(x, y);
            if (pc.s_half == 0 || pc.c_half == 0)
                throw SingularEvaluation("phi/2 on a coordinate axis: singular point of V_III");
            double t = pot.beta / (pc.c_half * pc.c_half) + pot.gamma / (pc.s_half * pc.s_half);
            return pot.alpha / pc.r + t / (pc.r * pc.r);
        }
        case PotentialKind::SW_IV: {
            auto pc = detail::polar_of(x, y);
            double s = pot.beta * pc.c_half + pot.gamma * pc.s_half;
            return pot.alpha / pc.r + s / std::sqrt(pc.r);
        }
    }
    throw std::logic_error("unknown potential kind");
}

/// Closed-form (dV/dx, dV/dy); no numerical differentiation anywhere.
inline std::pair<double, double> potential_gradient(const PotentialSpec& pot, const Parameters& p,
                                                    double x, double y) {
    const double M = p.mass_d();
    switch (pot.kind) {
        case PotentialKind::Isotropic: {
            double w2 = p.omega_d() * p.omega_d();
            return {M * w2 * x, M * w2 * y};
        }
        case PotentialKind::OscillatorGravity: {
            double w2 = p.omega_d() * p.omega_d();
            return {M * w2 * x, M * w2 * y + M * p.gravity_d()};
        }
        case PotentialKind::Anisotropic: {
            double wx = to_double(p.omega_x), wy = to_double(p.omega_y);
            return {M * wx * wx * x, M * wy * wy * y};
        }
        case PotentialKind::SW_I:
            if (x == 0) throw SingularEvaluation("x = 0: singular point of V_I");
            if (y == 0) throw SingularEvaluation("y = 0: singular point of V_I");
            return {2 * pot.alpha * x - 2 * pot.beta / (x * x * x),
                    2 * pot.alpha * y - 2 * pot.gamma / (y * y * y)};
        case PotentialKind::SW_II:
            if (x == 0) throw SingularEvaluation("x = 0: singular point of V_II");
            return {2 * pot.alpha * x - 2 * pot.beta / (x * x * x), 8 * pot.alpha * y + pot.gamma};
        case PotentialKind::SW_III: {
            auto pc = detail::polar_of(x, y);
            if (pc.s_half == 0 || pc.c_half == 0)
                throw SingularEvaluation("phi/2 on a coordinate axis: singular point of V_III");
            double r = pc.r, r2 = r * r;
            double t = pot.beta / (pc.c_half * pc.c_half) + pot.gamma / (pc.s_half * pc.s_half);
            // dt/dphi with t(phi) = beta/cos^2(phi/2) + gamma/sin^2(phi/2)
            double tp = pot.beta * pc.s_half / (pc.c_half * pc.c_half * pc.c_half) -
                        pot.gamma * pc.c_half / (pc.s_half * pc.s_half * pc.s_half);
            double dV_dr = -pot.alpha / r2 - 2 * t / (r2 * r);
            double dV_dphi = tp / r2;
            return {dV_dr * x / r - dV_dphi * y / r2, dV_dr * y / r + dV_dphi * x / r2};
        }
        case PotentialKind::SW_IV: {
            auto pc = detail::polar_of(x, y);
            double r = pc.r, r2 = r * r;
            double s = pot.beta * pc.c_half + pot.gamma * pc.s_half;
            double sp = -pot.beta * pc.s_half + pot.gamma * pc.c_half;  // ds/d(phi/2)
            double dV_dr = -pot.alpha / r2 - 0.5 * s / (r * std::sqrt(r));
            double dV_dphi = 0.5 * sp / std::sqrt(r);
            return {dV_dr * x / r - dV_dphi * y / r2, dV_dr * y / r + dV_dphi * x / r2};
        }
    }
    throw std::logic_error("unknown potential kind");
}

inline double hamiltonian_value(const Parameters& p, const PotentialSpec& pot, const PhaseState& s) {
    return (s.px * s.px + s.py * s.py) / (2 * p.mass_d()) + potential_value(pot, p, s.x, s.y) +
           s.ptheta * s.ptheta / (2 * p.inertia_d());
}

/// Exact H for the polynomial potential variants (isotropic / gravity / anisotropic).
inline Rational hamiltonian_value_exact(const Parameters& p, const PotentialSpec& pot, const ExactState& s) {
    if (!pot.oscillator_family())
        throw std::domain_error("exact evaluation supports only the oscillator-family potentials");
    Rational V;
    switch (pot.kind) {
        case PotentialKind::Isotropic:
            V = p.mass * p.omega * p.omega * (s.x * s.x + s.y * s.y) / 2;
            break;
        case PotentialKind::OscillatorGravity:
            V = p.mass * p.omega * p.omega * (s.x * s.x + s.y * s.y) / 2 + p.mass * p.gravity * s.y;
            break;
        case PotentialKind::Anisotropic:
            V = p.mass * (p.omega_x * p.omega_x * s.x * s.x + p.omega_y * p.omega_y * s.y * s.y) / 2;
            break;
        default:
            break;
    }
    return (s.px * s.px + s.py * s.py) / (2 * p.mass) + V + s.ptheta * s.ptheta / (2 * p.inertia);
}

}  // namespace rotor
