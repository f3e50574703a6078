// Acceptance suite: one test case per criterion, each printing a single
// pass/fail line. Run via `ctest -R acceptance` or directly with -s.

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <numbers>
#include <numeric>
#include <random>

#include "rotor/rotor.hpp"

using namespace rotor;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

void report(int criterion, const char* label, bool pass) {
    std::printf("[criterion %d] %-58s %s\n", criterion, label, pass ? "PASS" : "FAIL");
    std::fflush(stdout);
}

Parameters random_params(std::mt19937& rng, bool with_gravity) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    Parameters p;
    p.mass = Rational(num(rng), den(rng));
    p.omega = Rational(num(rng), den(rng));
    p.inertia = rod_inertia(p.mass, Rational(num(rng), den(rng)));
    if (with_gravity) p.gravity = Rational(num(rng), den(rng));
    return p;
}

Observable random_observable(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(1, 3), deg(0, 2), four(-3, 3);
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
    Observable o;
    int terms = n_terms(rng);
    for (int t = 0; t < terms; ++t) {
        FourierMonomial m;
        int budget = 4;
        for (int i = 0; i < 5; ++i) {
            int e = std::min(deg(rng), budget);
            m.exp[i] = e;
            budget -= e;
        }
        m.fourier_index = four(rng);
        o.add_term(m, RationalComplex(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    }
    return o;
}

}  // namespace

TEST_CASE("criterion 1: su(2) bracket table") {
    std::mt19937 rng(101);
    bool ok = true;
    for (int draw = 0; draw < 10; ++draw) {
        Parameters p = random_params(rng, false);
        Observable l = build_named("L", p), g1 = build_named("G1", p), g2 = build_named("G2", p);
        const RationalComplex w2{p.omega * p.omega};
        ok = ok && (poisson_bracket(l, g1) + g2).is_zero();
        ok = ok && (poisson_bracket(l, g2) - g1 * RationalComplex(4L)).is_zero();
        ok = ok && (poisson_bracket(g1, g2) + l * w2).is_zero();
    }
    report(1, "su(2) table exact for 10 random (M, w)", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 2: Casimir identities") {
    std::mt19937 rng(102);
    bool ok = true;
    for (int draw = 0; draw < 10; ++draw) {
        ok = ok && casimir_residual(random_params(rng, false), AlgebraVariant::Isotropic).is_zero();
        ok = ok && casimir_residual(random_params(rng, true), AlgebraVariant::Gravity).is_zero();
    }
    report(2, "isotropic and gravity Casimirs exact, 10 draws each", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 3: ladder and K-bracket identities") {
    Parameters p;
    Observable f1 = build_named("F1", p), z = build_named("Z", p);
    bool ok = (poisson_bracket(z, f1) - z * (RationalComplex::i() * RationalComplex(p.omega))).is_zero();
    for (long m = 1; m <= 4 && ok; ++m)
        for (long n = -4; n <= 4 && ok; ++n) {
            if (n == 0 || std::gcd(m, std::abs(n)) != 1) continue;
            Observable k = builders::resonance_k(m, n, p);
            Observable phase =
                Observable::constant(RationalComplex(Rational(m) * p.omega * p.inertia)) -
                Observable::variable(Var::ptheta) * RationalComplex(Rational(n));
            ok = (poisson_bracket(k, f1) * RationalComplex(p.inertia) - RationalComplex::i() * phase * k)
                     .is_zero();
        }
    report(3, "{Z,F1} = iwZ and I{K,F1} = i(mwI - n ptheta)K", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 4: gravity brackets") {
    Parameters p;
    p.gravity = Rational(49, 5);
    const auto V = AlgebraVariant::Gravity;
    Observable f1 = build_named("F1", p, V);
    Observable mgx = Observable::variable(Var::x) * RationalComplex(p.mass * p.gravity);
    bool ok = (poisson_bracket(f1, build_named("L", p, V)) - mgx).is_zero();
    ok = ok && poisson_bracket(f1, build_named("Lprime", p, V)).is_zero();
    ok = ok && poisson_bracket(f1, build_named("G1prime", p, V)).is_zero();
    ok = ok && poisson_bracket(f1, build_named("G2prime", p, V)).is_zero();
    report(4, "{F1,L} = Mgx; primed integrals Poisson-commute with F1", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 5: Jacobian rank 5 / 4 / 5") {
    Parameters p;
    ExactState s{Rational(1), Rational(1, 2), Rational(0), Rational(1, 3), Rational(1, 5),
                 p.inertia * p.omega};  // resonant: p_theta = I w
    std::vector<Observable> base{build_named("F1", p), build_named("F2", p), build_named("G1", p),
                                 build_named("G2", p)};
    std::vector<Observable> with_p11 = base;
    with_p11.push_back(builders::resonance_p(1, 1, p));
    std::vector<Observable> with_l = with_p11;
    with_l.push_back(build_named("L", p));
    bool ok = exact_rank(gradient_matrix_exact(with_p11, s)) == 5 &&
              exact_rank(gradient_matrix_exact(base, s)) == 4 &&
              exact_rank(gradient_matrix_exact(with_l, s)) == 5;
    report(5, "exact rank: with P11 = 5, without = 4, plus L = 5", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 6: resonant conservation and non-conservation") {
    Parameters p;
    const double Iw = to_double(p.inertia * p.omega);
    PhaseState resonant{1, 0, 0, 0, 1, Iw};
    Trajectory tr = simulate(PotentialSpec::isotropic(), p, resonant, 1e-3, 10 * kTwoPi, 10,
                             {"P_1_1", "Q_1_1"}, Method::Analytic);
    DriftReport rep = drift_report(tr);
    bool ok = rep.entries.at("P_1_1").max_rel_deviation <= 1e-10 &&
              rep.entries.at("Q_1_1").max_rel_deviation <= 1e-10;

    PhaseState off = resonant;
    off.ptheta = 2 * Iw;
    Trajectory tn = simulate(PotentialSpec::isotropic(), p, off, 1e-3, 10 * kTwoPi, 10,
                             {"P_1_1", "K_1_1"}, Method::Analytic);
    double k0 = std::abs(tn.tracked.at("K_1_1").front());
    ok = ok && drift_report(tn).entries.at("P_1_1").max_abs_deviation > 0.1 * k0;
    report(6, "P11/Q11 conserved at ptheta = Iw, drifting at 2Iw", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 7: figure-2 scenario") {
    Parameters p;  // M = 1, k = 1 (w = 1), rod length 1 (I = 1/12)
    PhaseState s0{1, 0, 0, 0, 1, to_double(p.inertia)};  // p_theta = I: one revolution per orbit
    Trajectory ana = simulate(PotentialSpec::isotropic(), p, s0, 1e-3, kTwoPi, 1, {}, Method::Analytic);
    Trajectory ver = simulate(PotentialSpec::isotropic(), p, s0, 1e-3, kTwoPi, 1, {}, Method::Verlet);
    bool ok = recurrence_error(ana, kTwoPi) <= 1e-12;
    ok = ok && recurrence_error(ver, kTwoPi) <= 1e-5;
    ok = ok && std::abs(theta_advance(ana) - kTwoPi) <= 1e-12;
    report(7, "fig-2: recurrence 1e-12 / 1e-5, theta advance 2pi", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 8: anisotropic 3:5 closure") {
    Parameters p;
    p.omega_x = 3;
    p.omega_y = 5;
    PhaseState s0{1, 0.5, 0, 0, 0, to_double(p.inertia)};
    Trajectory t = simulate(PotentialSpec::anisotropic(), p, s0, 1e-4, kTwoPi, 50, {}, Method::Verlet);
    bool ok = recurrence_error(t, kTwoPi) <= 1e-5;
    report(8, "3:5 Lissajous recurrence <= 1e-5 at dt = 1e-4", ok);
    REQUIRE(ok);
}

TEST_CASE("criterion 9: property suites") {
    // bracket algebra identities, >= 200 random triples
    std::mt19937 rng(109);
    bool algebra_ok = true;
    for (int i = 0; i < 200; ++i) {
        Observable a = random_observable(rng), b = random_observable(rng), c = random_observable(rng);
        algebra_ok = algebra_ok && (poisson_bracket(a, b) + poisson_bracket(b, a)).is_zero();
        algebra_ok = algebra_ok &&
                     (poisson_bracket(a, b * c) - poisson_bracket(a, b) * c - b * poisson_bracket(a, c))
                         .is_zero();
        algebra_ok = algebra_ok && (poisson_bracket(a, poisson_bracket(b, c)) +
                                    poisson_bracket(b, poisson_bracket(c, a)) +
                                    poisson_bracket(c, poisson_bracket(a, b)))
                                       .is_zero();
        if (!algebra_ok) break;
    }

    // verlet second-order convergence
    Parameters p;
    PhaseState s0{1, 0, 0, 0, 1, 0.1};
    auto period_error = [&](double dt) {
        Trajectory t = simulate(PotentialSpec::isotropic(), p, s0, dt, kTwoPi, 1 << 30, {}, Method::Verlet);
        PhaseState exact = analytic_flow(p, AlgebraVariant::Isotropic, s0, kTwoPi);
        const PhaseState& got = t.states.back();
        return std::hypot(std::hypot(got.x - exact.x, got.y - exact.y),
                          std::hypot(got.px - exact.px, got.py - exact.py));
    };
    double ratio = period_error(2e-3) / period_error(1e-3);
    bool convergence_ok = ratio >= 3.6 && ratio <= 4.4;

    // bit-exact p_theta conservation for every variant
    Parameters pa = p;
    pa.omega_x = 3;
    pa.omega_y = 5;
    Parameters pg = p;
    pg.gravity = 1;
    bool ptheta_ok = true;
    std::vector<std::pair<PotentialSpec, Parameters>> cases{
        {PotentialSpec::isotropic(), p},
        {PotentialSpec::gravity(), pg},
        {PotentialSpec::anisotropic(), pa},
        {PotentialSpec::sw(PotentialKind::SW_I, 1.0, 0.3, 0.4), p},
        {PotentialSpec::sw(PotentialKind::SW_II, 1.0, 0.3, 0.4), p},
        {PotentialSpec::sw(PotentialKind::SW_III, -1.0, 0.2, 0.3), p},
        {PotentialSpec::sw(PotentialKind::SW_IV, -1.0, 0.2, 0.3), p}};
    for (const auto& [pot, par] : cases) {
        PhaseState st{0.9, 0.8, 0.0, 0.2, -0.1, 0.123456789};
        for (int i = 0; i < 200 && ptheta_ok; ++i) {
            st = verlet_step(pot, par, st, 1e-3);
            ptheta_ok = st.ptheta == 0.123456789;
        }
    }

    // resonance detector vs brute force, 1000 cases
    std::mt19937 rng2(209);
    std::uniform_real_distribution<double> ratio_dist(0.0, 8.0);
    std::uniform_int_distribution<long> den_dist(1, 150);
    bool resonance_ok = true;
    for (int i = 0; i < 1000 && resonance_ok; ++i) {
        double x = ratio_dist(rng2);
        long max_den = den_dist(rng2);
        auto cf = rotor::detail::best_rational(x, max_den);
        // brute force over reduced fractions
        Rational target{x};
        long bp = 0, bq = 1;
        Rational berr = boost::multiprecision::abs(target);
        for (long q = 1; q <= max_den; ++q) {
            long pr = std::llround(x * q);
            for (long cand : {pr - 1, pr, pr + 1}) {
                if (cand < 0 || std::gcd(cand, q) != 1) continue;
                Rational err = boost::multiprecision::abs(Rational(cand, q) - target);
                if (err < berr) {
                    berr = err;
                    bp = cand;
                    bq = q;
                }
            }
        }
        resonance_ok = cf.first == bp && cf.second == bq;
    }

    report(9, "algebra properties / convergence / ptheta / resonance",
           algebra_ok && convergence_ok && ptheta_ok && resonance_ok);
    CHECK(algebra_ok);
    CHECK(convergence_ok);
    CHECK(ptheta_ok);
    REQUIRE(resonance_ok);
}
