#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "rotor/builders.hpp"
#include "rotor/observable.hpp"

namespace rotor {

struct RelationCheck {
    bool exact_zero = false;
    Observable residual;
};

inline RelationCheck verify_relation(const Observable& lhs, const Observable& rhs) {
    Observable residual = lhs - rhs;
    return {residual.is_zero(), residual};
}

/// Isotropic: 4 G1^2 + G2^2 + w^2 L^2 - (F1 - F2)^2.
/// Gravity:   the primed generators with the shifted Casimir value.
/// Both must reduce to the zero observable.
inline Observable casimir_residual(const Parameters& p, AlgebraVariant variant) {
    using namespace builders;
    const RationalComplex w2{p.omega * p.omega};
    if (variant == AlgebraVariant::Isotropic) {
        Observable g1 = fradkin_g1(p), g2 = fradkin_g2(p), l = angular_momentum();
        Observable fdiff = hamiltonian(p, variant) - rotor_energy(p);
        return g1 * g1 * RationalComplex(4L) + g2 * g2 + l * l * w2 - fdiff * fdiff;
    }
    Observable g1 = fradkin_g1_shifted(p), g2 = fradkin_g2_shifted(p), l = angular_momentum_shifted(p);
    Observable fshift = hamiltonian(p, variant) - rotor_energy(p) +
                        c(p.mass * p.gravity * p.gravity / (2 * p.omega * p.omega));
    return g1 * g1 * RationalComplex(4L) + g2 * g2 + l * l * w2 - fshift * fshift;
}

struct Claim {
    std::string id;
    std::string description;
    bool pass = false;
    std::size_t residual_terms = 0;
    std::string details;
};

/// Test-harness hook: may replace a freshly built named observable before it
/// enters the claim checks (used for negative controls).
using BuilderHook = std::function<Observable(const std::string& name, Observable built)>;

/// The full printed-relation suite: involution triple, su(2) table, Casimirs,
/// ladder and K-bracket identities, and the gravity (primed) relations.
inline std::vector<Claim> run_algebra_claims(const Parameters& iso, const Parameters& grav,
                                             const BuilderHook& hook = {}) {
    auto get = [&](const std::string& name, const Parameters& p, AlgebraVariant v) {
        Observable o = build_named(name, p, v);
        return hook ? hook(name, std::move(o)) : o;
    };
    std::vector<Claim> claims;
    auto push = [&](const std::string& id, const std::string& desc, const Observable& residual) {
        claims.push_back({id, desc, residual.is_zero(), residual.term_count(),
                          residual.is_zero() ? "" : to_string(residual)});
    };

    const auto VI = AlgebraVariant::Isotropic;
    const auto VG = AlgebraVariant::Gravity;
    const RationalComplex w2{iso.omega * iso.omega};
    Observable f1 = get("F1", iso, VI), f2 = get("F2", iso, VI), l = get("L", iso, VI);
    Observable g1 = get("G1", iso, VI), g2 = get("G2", iso, VI), z = get("Z", iso, VI);

    push("abelian.F1_F2", "{F1,F2} = 0", poisson_bracket(f1, f2));
    push("abelian.F1_L", "{F1,L} = 0", poisson_bracket(f1, l));
    push("abelian.F2_L", "{F2,L} = 0", poisson_bracket(f2, l));
    push("su2.bracket.L_G1", "{L,G1} = -G2", poisson_bracket(l, g1) + g2);
    push("su2.bracket.L_G2", "{L,G2} = 4 G1", poisson_bracket(l, g2) - g1 * RationalComplex(4L));
    push("su2.bracket.G1_G2", "{G1,G2} = -w^2 L", poisson_bracket(g1, g2) + l * w2);
    {
        Observable fdiff = f1 - f2;
        push("casimir.isotropic", "4 G1^2 + G2^2 + w^2 L^2 = (F1-F2)^2",
             g1 * g1 * RationalComplex(4L) + g2 * g2 + l * l * w2 - fdiff * fdiff);
    }
    push("ladder.Z_F1", "{Z,F1} = i w Z",
         poisson_bracket(z, f1) - z * (RationalComplex::i() * RationalComplex(iso.omega)));

    // I {K_{m,n}, F1} = i (m w I - n p_theta) K_{m,n}, coprime m <= 4, |n| <= 4
    for (long m = 1; m <= 4; ++m)
        for (long n = -4; n <= 4; ++n) {
            if (n == 0 || std::gcd(m, n < 0 ? -n : n) != 1) continue;
            Observable k = builders::resonance_k(m, n, iso);
            Observable phase = Observable::constant(RationalComplex(Rational(m) * iso.omega * iso.inertia)) -
                               Observable::variable(Var::ptheta) * RationalComplex(Rational(n));
            Observable residual = poisson_bracket(k, f1) * RationalComplex(iso.inertia) -
                                  RationalComplex::i() * phase * k;
            push("kbracket.m" + std::to_string(m) + "_n" + std::to_string(n),
                 "I {K,F1} = i (m w I - n p_theta) K, (m,n)=(" + std::to_string(m) + "," +
                     std::to_string(n) + ")",
                 residual);
        }

    // gravity variant
    const RationalComplex gw2{grav.omega * grav.omega};
    Observable gf1 = get("F1", grav, VG), gf2 = get("F2", grav, VG);
    Observable gl = get("L", grav, VG);
    Observable lp = get("Lprime", grav, VG), g1p = get("G1prime", grav, VG), g2p = get("G2prime", grav, VG);

    push("gravity.L_not_conserved", "{F1,L} = M g x (gravity)",
         poisson_bracket(gf1, gl) -
             Observable::variable(Var::x) * RationalComplex(grav.mass * grav.gravity));
    push("gravity.primed.F1_Lprime", "{F1,L'} = 0", poisson_bracket(gf1, lp));
    push("gravity.primed.F1_G1prime", "{F1,G1'} = 0", poisson_bracket(gf1, g1p));
    push("gravity.primed.F1_G2prime", "{F1,G2'} = 0", poisson_bracket(gf1, g2p));
    push("gravity.su2prime.L_G1", "{L',G1'} = -G2'", poisson_bracket(lp, g1p) + g2p);
    push("gravity.su2prime.L_G2", "{L',G2'} = 4 G1'", poisson_bracket(lp, g2p) - g1p * RationalComplex(4L));
    push("gravity.su2prime.G1_G2", "{G1',G2'} = -w^2 L'", poisson_bracket(g1p, g2p) + lp * gw2);
    {
        Observable fshift = gf1 - gf2 +
            builders::c(grav.mass * grav.gravity * grav.gravity / (2 * grav.omega * grav.omega));
        push("casimir.gravity", "4 G1'^2 + G2'^2 + w^2 L'^2 = (F1-F2+Mg^2/2w^2)^2",
             g1p * g1p * RationalComplex(4L) + g2p * g2p + lp * lp * gw2 - fshift * fshift);
    }
    return claims;
}

}  // namespace rotor
