#pragma once

#include <numeric>
#include <stdexcept>
#include <string>

#include "rotor/model.hpp"
#include "rotor/observable.hpp"

namespace rotor {

/// Which Hamiltonian the named integrals refer to.
enum class AlgebraVariant { Isotropic, Gravity };

namespace builders {

inline Observable coord(Var v) { return Observable::variable(v); }
inline Observable c(Rational q) { return Observable::constant(RationalComplex(std::move(q))); }
inline RationalComplex i_unit() { return RationalComplex::i(); }

inline Observable hamiltonian(const Parameters& p, AlgebraVariant variant) {
    auto X = coord(Var::x), Y = coord(Var::y);
    auto Px = coord(Var::px), Py = coord(Var::py), Pt = coord(Var::ptheta);
    Observable h = (Px * Px + Py * Py) * RationalComplex(Rational(1) / (2 * p.mass)) +
                   (X * X + Y * Y) * RationalComplex(p.mass * p.omega * p.omega / 2) +
                   Pt * Pt * RationalComplex(Rational(1) / (2 * p.inertia));
    if (variant == AlgebraVariant::Gravity)
        h = h + Y * RationalComplex(p.mass * p.gravity);
    return h;
}

/// F2 = p_theta^2 / (2 I)
inline Observable rotor_energy(const Parameters& p) {
    auto Pt = coord(Var::ptheta);
    return Pt * Pt * RationalComplex(Rational(1) / (2 * p.inertia));
}

/// L = x p_y - y p_x
inline Observable angular_momentum() {
    return coord(Var::x) * coord(Var::py) - coord(Var::y) * coord(Var::px);
}

/// G1 = p_x p_y / (2M) + (M w^2 / 2) x y   (x-y Demkov-Fradkin component)
inline Observable fradkin_g1(const Parameters& p) {
    return coord(Var::px) * coord(Var::py) * RationalComplex(Rational(1) / (2 * p.mass)) +
           coord(Var::x) * coord(Var::y) * RationalComplex(p.mass * p.omega * p.omega / 2);
}

/// G2 = (p_x^2 - p_y^2)/(2M) + (M w^2 / 2)(x^2 - y^2)
inline Observable fradkin_g2(const Parameters& p) {
    auto X = coord(Var::x), Y = coord(Var::y), Px = coord(Var::px), Py = coord(Var::py);
    return (Px * Px - Py * Py) * RationalComplex(Rational(1) / (2 * p.mass)) +
           (X * X - Y * Y) * RationalComplex(p.mass * p.omega * p.omega / 2);
}

inline Observable ladder_u() { return coord(Var::x) + i_unit() * coord(Var::y); }
inline Observable ladder_w() { return coord(Var::px) + i_unit() * coord(Var::py); }

/// Z = w + i M w u = (p_x - Mw y) + i (p_y + Mw x)
inline Observable ladder_z(const Parameters& p) {
    return ladder_w() + (i_unit() * RationalComplex(p.mass * p.omega)) * ladder_u();
}

inline Observable ladder_z_bar(const Parameters& p) { return ladder_z(p).conjugate(); }

/// L' = L - (g / w^2) p_x, the angular momentum about the shifted equilibrium.
inline Observable angular_momentum_shifted(const Parameters& p) {
    return angular_momentum() - coord(Var::px) * RationalComplex(p.gravity / (p.omega * p.omega));
}

/// G1' = G1 + M g x / 2
inline Observable fradkin_g1_shifted(const Parameters& p) {
    return fradkin_g1(p) + coord(Var::x) * RationalComplex(p.mass * p.gravity / 2);
}

/// G2' = G2 - M g y - M g^2 / (2 w^2)
inline Observable fradkin_g2_shifted(const Parameters& p) {
    return fradkin_g2(p) - coord(Var::y) * RationalComplex(p.mass * p.gravity) -
           c(p.mass * p.gravity * p.gravity / (2 * p.omega * p.omega));
}

inline void check_resonance_indices(long m, long n) {
    if (m <= 0) throw std::invalid_argument("K_{m,n}: m must be positive");
    if (n == 0) throw std::invalid_argument("K_{m,n}: n must be nonzero");
    if (std::gcd(m, n < 0 ? -n : n) != 1) throw std::invalid_argument("K_{m,n}: m and |n| must be coprime");
}

/// K_{m,n} = Z^m exp(-i n theta)
inline Observable resonance_k(long m, long n, const Parameters& p) {
    check_resonance_indices(m, n);
    return ladder_z(p).pow(static_cast<unsigned>(m)) * Observable::fourier(static_cast<int>(-n));
}

/// P_{m,n} = (K + conj(K)) / 2, real-valued.
inline Observable resonance_p(long m, long n, const Parameters& p) {
    Observable k = resonance_k(m, n, p);
    return (k + k.conjugate()) * RationalComplex(Rational(1, 2));
}

/// Q_{m,n} = (K - conj(K)) / (2i), real-valued.
inline Observable resonance_q(long m, long n, const Parameters& p) {
    Observable k = resonance_k(m, n, p);
    return (k - k.conjugate()) * (RationalComplex(Rational(1, 2)) / i_unit());
}

}  // namespace builders

/// Lookup by name: H, F1, F2, L, G1, G2, u, w, Z, Zbar, Lprime, G1prime, G2prime.
/// With g = 0 the primed builders coincide with the unprimed ones term for term.
inline Observable build_named(const std::string& name, const Parameters& p,
                              AlgebraVariant variant = AlgebraVariant::Isotropic) {
    using namespace builders;
    if (name == "H" || name == "F1") return hamiltonian(p, variant);
    if (name == "F2") return rotor_energy(p);
    if (name == "L") return angular_momentum();
    if (name == "G1") return fradkin_g1(p);
    if (name == "G2") return fradkin_g2(p);
    if (name == "u") return ladder_u();
    if (name == "w") return ladder_w();
    if (name == "Z") return ladder_z(p);
    if (name == "Zbar") return ladder_z_bar(p);
    if (name == "Lprime") return angular_momentum_shifted(p);
    if (name == "G1prime") return fradkin_g1_shifted(p);
    if (name == "G2prime") return fradkin_g2_shifted(p);
    if (name == "ptheta") return builders::coord(Var::ptheta);
    throw std::invalid_argument("unknown observable name: " + name);
}

/// Extends build_named with the indexed families "K_m_n", "P_m_n", "Q_m_n"
/// (n may be negative, e.g. "P_1_-2").
inline Observable resolve_observable(const std::string& name, const Parameters& p,
                                     AlgebraVariant variant = AlgebraVariant::Isotropic) {
    if (name.size() > 2 && (name[0] == 'K' || name[0] == 'P' || name[0] == 'Q') && name[1] == '_') {
        auto second = name.find('_', 2);
        if (second != std::string::npos) {
            long m = std::stol(name.substr(2, second - 2));
            long n = std::stol(name.substr(second + 1));
            if (name[0] == 'K') return builders::resonance_k(m, n, p);
            if (name[0] == 'P') return builders::resonance_p(m, n, p);
            return builders::resonance_q(m, n, p);
        }
    }
    return build_named(name, p, variant);
}

}  // namespace rotor
