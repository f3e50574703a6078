#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotor/builders.hpp"
#include "rotor/model.hpp"
#include "rotor/observable.hpp"

namespace rotor {

enum class Method { Analytic, Verlet };

struct TrajectoryMeta {
    PotentialKind potential = PotentialKind::Isotropic;
    Parameters params;
    Method method = Method::Analytic;
    double dt = 0, t_final = 0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<PhaseState> states;
    std::map<std::string, std::vector<std::complex<double>>> tracked;
    TrajectoryMeta meta;
};

/// Closed-form flow of the oscillator(+rotor), optionally with gravity.
/// Gravity is the isotropic flow conjugated by the shift y -> y + g/w^2.
inline PhaseState analytic_flow(const Parameters& p, AlgebraVariant variant, PhaseState s0, double t) {
    const double M = p.mass_d(), w = p.omega_d();
    const double shift = variant == AlgebraVariant::Gravity ? p.gravity_d() / (w * w) : 0.0;
    s0.y += shift;
    const double cw = std::cos(w * t), sw = std::sin(w * t);
    PhaseState s;
    s.x = s0.x * cw + s0.px / (M * w) * sw;
    s.y = s0.y * cw + s0.py / (M * w) * sw;
    s.px = -M * w * s0.x * sw + s0.px * cw;
    s.py = -M * w * s0.y * sw + s0.py * cw;
    s.theta = s0.theta + s0.ptheta / p.inertia_d() * t;
    s.ptheta = s0.ptheta;
    s.y -= shift;
    return s;
}

/// One velocity-Verlet step: half-kick, drift, half-kick. p_theta is never
/// touched (theta is cyclic), so it is conserved bit-exactly.
inline PhaseState verlet_step(const PotentialSpec& pot, const Parameters& p, PhaseState s, double dt) {
    const double M = p.mass_d();
    auto [gx, gy] = potential_gradient(pot, p, s.x, s.y);
    s.px -= 0.5 * dt * gx;
    s.py -= 0.5 * dt * gy;
    s.x += dt * s.px / M;
    s.y += dt * s.py / M;
    s.theta += dt * s.ptheta / p.inertia_d();
    auto [gx2, gy2] = potential_gradient(pot, p, s.x, s.y);
    s.px -= 0.5 * dt * gx2;
    s.py -= 0.5 * dt * gy2;
    return s;
}

namespace detail {

inline AlgebraVariant variant_of(PotentialKind k) {
    return k == PotentialKind::OscillatorGravity ? AlgebraVariant::Gravity : AlgebraVariant::Isotropic;
}

}  // namespace detail

/// Integrate and sample. The step is adjusted so an integer number of steps
/// lands exactly on t_final; the final state is always sampled. Tracked
/// observables are resolved by name ("H" and "ptheta" evaluate from the
/// state directly, anything else through the observable algebra).
inline Trajectory simulate(const PotentialSpec& pot, const Parameters& p, const PhaseState& s0,
                           double dt, double t_final, long sample_stride,
                           const std::vector<std::string>& tracked, Method method = Method::Verlet) {
    if (t_final <= 0) throw std::invalid_argument("t_final must be positive");
    if (dt <= 0) throw std::invalid_argument("dt must be positive");
    if (sample_stride < 1) throw std::invalid_argument("sample_stride must be >= 1");
    if (method == Method::Analytic && !(pot.kind == PotentialKind::Isotropic ||
                                        pot.kind == PotentialKind::OscillatorGravity))
        throw std::invalid_argument("analytic flow is available only for the isotropic and gravity variants");

    const long n_steps = std::max(1L, std::lround(t_final / dt));
    const double h = t_final / static_cast<double>(n_steps);
    const AlgebraVariant variant = detail::variant_of(pot.kind);

    std::map<std::string, Observable> tracked_obs;
    for (const auto& name : tracked)
        if (name != "H" && name != "ptheta") tracked_obs.emplace(name, resolve_observable(name, p, variant));

    Trajectory traj;
    traj.meta = {pot.kind, p, method, h, t_final};
    auto record = [&](double t, const PhaseState& s) {
        traj.times.push_back(t);
        traj.states.push_back(s);
        for (const auto& name : tracked) {
            std::complex<double> v;
            if (name == "H") v = hamiltonian_value(p, pot, s);
            else if (name == "ptheta") v = s.ptheta;
            else v = evaluate(tracked_obs.at(name), s);
            traj.tracked[name].push_back(v);
        }
    };

    PhaseState s = s0;
    record(0.0, s);
    for (long i = 1; i <= n_steps; ++i) {
        double t = (i == n_steps) ? t_final : i * h;
        if (method == Method::Analytic)
            s = analytic_flow(p, variant, s0, t);
        else
            s = verlet_step(pot, p, s, h);
        if (i % sample_stride == 0 || i == n_steps) record(t, s);
    }
    return traj;
}

struct DriftEntry {
    std::complex<double> initial;
    double max_abs_deviation = 0;
    double max_rel_deviation = 0;  // deviation / max(1, |initial|)
};

struct DriftReport {
    std::map<std::string, DriftEntry> entries;
};

inline DriftReport drift_report(const Trajectory& traj) {
    if (traj.times.size() < 2) throw std::invalid_argument("drift report needs at least 2 samples");
    if (traj.tracked.empty()) throw std::invalid_argument("drift report needs at least 1 tracked observable");
    DriftReport rep;
    for (const auto& [name, values] : traj.tracked) {
        DriftEntry e;
        e.initial = values.front();
        for (const auto& v : values)
            e.max_abs_deviation = std::max(e.max_abs_deviation, std::abs(v - e.initial));
        e.max_rel_deviation = e.max_abs_deviation / std::max(1.0, std::abs(e.initial));
        rep.entries[name] = e;
    }
    return rep;
}

/// Euclidean distance in (x, y, p_x, p_y) between the state at t = period and
/// the initial state. theta is excluded (unbounded); use theta_advance for it.
inline double recurrence_error(const Trajectory& traj, double period) {
    if (traj.times.empty() || period < traj.times.front() || period > traj.times.back() + 1e-12)
        throw std::invalid_argument("period outside the sampled time range");
    auto it = std::lower_bound(traj.times.begin(), traj.times.end(), period);
    std::size_t i = static_cast<std::size_t>(it - traj.times.begin());
    if (i == traj.times.size()) i = traj.times.size() - 1;
    PhaseState at;
    if (std::abs(traj.times[i] - period) < 1e-9 || i == 0) {
        at = traj.states[i];
    } else {
        // linear interpolation between the bracketing samples
        const PhaseState &a = traj.states[i - 1], &b = traj.states[i];
        double u = (period - traj.times[i - 1]) / (traj.times[i] - traj.times[i - 1]);
        at = {a.x + u * (b.x - a.x), a.y + u * (b.y - a.y), a.theta + u * (b.theta - a.theta),
              a.px + u * (b.px - a.px), a.py + u * (b.py - a.py), a.ptheta};
    }
    const PhaseState& s0 = traj.states.front();
    double dx = at.x - s0.x, dy = at.y - s0.y, dpx = at.px - s0.px, dpy = at.py - s0.py;
    return std::sqrt(dx * dx + dy * dy + dpx * dpx + dpy * dpy);
}

/// Unwrapped theta advance over the whole run.
inline double theta_advance(const Trajectory& traj) {
    if (traj.states.empty()) return 0;
    return traj.states.back().theta - traj.states.front().theta;
}

// ---- CSV export -------------------------------------------------------------
// Header: t,x,y,theta,px,py,ptheta[,<name>_re,<name>_im...]; 17 significant
// digits so the dump is bit-faithful.

inline std::string format_g17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_csv(const Trajectory& traj, std::ostream& os) {
    os << "t,x,y,theta,px,py,ptheta";
    std::vector<std::string> names;
    for (const auto& [name, _] : traj.tracked) names.push_back(name);
    for (const auto& name : names) os << "," << name << "_re," << name << "_im";
    os << "\n";
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        const PhaseState& s = traj.states[i];
        os << format_g17(traj.times[i]) << "," << format_g17(s.x) << "," << format_g17(s.y) << ","
           << format_g17(s.theta) << "," << format_g17(s.px) << "," << format_g17(s.py) << ","
           << format_g17(s.ptheta);
        for (const auto& name : names) {
            const auto& v = traj.tracked.at(name)[i];
            os << "," << format_g17(v.real()) << "," << format_g17(v.imag());
        }
        os << "\n";
    }
}

}  // namespace rotor
