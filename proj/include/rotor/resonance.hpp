#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rotor/builders.hpp"
#include "rotor/dynamics.hpp"

namespace rotor {

struct ResonanceResult {
    double capital_omega = 0;  // Omega = p_theta / I
    double omega = 0;
    long m = 0;                // positive when found
    long n = 0;                // sign carries the rotation sense
    long max_denominator = 1;
    double abs_error = 0;      // |Omega/omega - m/n|
    bool found = false;
};

namespace detail {

/// Best rational approximation p/q of x >= 0 with 1 <= q <= max_den, via
/// continued-fraction convergents plus the final semiconvergent. The double
/// is treated as the exact dyadic rational it is, so every comparison is
/// exact. Ties prefer the smaller denominator (the convergent).
inline std::pair<long, long> best_rational(double x, long max_den) {
    Rational target{x};
    Integer n = numerator(target), d = denominator(target);
    Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    while (true) {
        Integer a = n / d;
        Integer q2 = q0 + a * q1;
        if (q2 > max_den) break;
        Integer p2 = p0 + a * p1;
        p0 = p1; q0 = q1; p1 = p2; q1 = q2;
        Integer r = n - a * d;
        if (r == 0) return {p1.convert_to<long>(), q1.convert_to<long>()};
        n = d; d = r;
    }
    Integer k = (Integer(max_den) - q0) / q1;
    Integer ps = p0 + k * p1, qs = q0 + k * q1;  // semiconvergent
    if (q1 < 1) return {ps.convert_to<long>(), qs.convert_to<long>()};
    // compare |ps/qs - x| vs |p1/q1 - x| by cross multiplication
    Rational e_semi = boost::multiprecision::abs(Rational(ps, qs) - target);
    Rational e_conv = boost::multiprecision::abs(Rational(p1, q1) - target);
    if (e_semi < e_conv) return {ps.convert_to<long>(), qs.convert_to<long>()};
    return {p1.convert_to<long>(), q1.convert_to<long>()};
}

}  // namespace detail

/// Find m/n ~ Omega/omega with |n| <= max_denominator (continued fractions).
/// found requires m >= 1: a vanishing ratio (p_theta = 0) is never resonant.
inline ResonanceResult resonance_detect(double capital_omega, double omega, long max_denominator,
                                        double tol) {
    if (!(omega > 0)) throw std::invalid_argument("omega must be positive");
    if (max_denominator < 1) throw std::invalid_argument("max_denominator must be >= 1");
    if (!(tol > 0)) throw std::invalid_argument("tol must be positive");
    ResonanceResult res;
    res.capital_omega = capital_omega;
    res.omega = omega;
    res.max_denominator = max_denominator;
    double ratio = capital_omega / omega;
    auto [p, q] = detail::best_rational(std::abs(ratio), max_denominator);
    res.abs_error = std::abs(std::abs(ratio) - double(p) / q);
    res.m = p;
    res.n = ratio < 0 ? -q : q;
    res.found = p >= 1 && res.abs_error <= tol;
    return res;
}

struct ScanEntry {
    bool resonant = false;  // exact: m*omega*I - n*p_theta == 0 in rationals
    double drift = 0;       // max |K_{m,n}(t) - K_{m,n}(0)| along the flow
    double initial_abs = 0; // |K_{m,n}(0)|
};

/// Empirical cross-check of the level-set conservation law along the analytic
/// flow. The resonance flag is decided exactly from the rational parameters
/// and the rational initial p_theta; the drift is measured in floating point.
inline std::map<std::pair<long, long>, ScanEntry> conservation_scan(
    const PotentialSpec& pot, const Parameters& p, const ExactState& s0_exact,
    const std::vector<std::pair<long, long>>& candidates, double t_final, long n_samples = 2000) {
    if (pot.kind != PotentialKind::Isotropic && pot.kind != PotentialKind::OscillatorGravity)
        throw std::invalid_argument("conservation scan needs an analytic-flow variant");
    const AlgebraVariant variant = detail::variant_of(pot.kind);
    const PhaseState s0 = s0_exact.to_double();

    std::map<std::pair<long, long>, ScanEntry> out;
    std::vector<PhaseState> samples;
    samples.reserve(static_cast<std::size_t>(n_samples) + 1);
    for (long i = 0; i <= n_samples; ++i)
        samples.push_back(analytic_flow(p, variant, s0, t_final * double(i) / double(n_samples)));

    for (auto [m, n] : candidates) {
        Observable k = builders::resonance_k(m, n, p);
        ScanEntry e;
        e.resonant = (Rational(m) * p.omega * p.inertia - Rational(n) * s0_exact.ptheta) == 0;
        std::complex<double> k0 = evaluate(k, s0);
        e.initial_abs = std::abs(k0);
        for (const auto& s : samples)
            e.drift = std::max(e.drift, std::abs(evaluate(k, s) - k0));
        out[{m, n}] = e;
    }
    return out;
}

}  // namespace rotor
