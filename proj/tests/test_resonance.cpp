#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "rotor/resonance.hpp"

using namespace rotor;

namespace {

// Brute-force oracle: scan every reduced fraction p/q with 1 <= q <= max_den,
// p = round(x*q) (the best numerator for that q), minimizing the exact error;
// ties prefer the smaller denominator.
std::pair<long, long> brute_force_best(double x, long max_den) {
    Rational target{x};
    long best_p = 0, best_q = 1;
    Rational best_err = boost::multiprecision::abs(target);  // p=0, q=1
    for (long q = 1; q <= max_den; ++q) {
        long p = std::llround(x * q);
        for (long cand : {p - 1, p, p + 1}) {
            if (cand < 0) continue;
            if (std::gcd(cand, q) != 1) continue;
            Rational err = boost::multiprecision::abs(Rational(cand, q) - target);
            if (err < best_err) {
                best_err = err;
                best_p = cand;
                best_q = q;
            }
        }
    }
    return {best_p, best_q};
}

}  // namespace

TEST_CASE("resonance detection examples") {
    auto r1 = resonance_detect(1.0, 1.0, 10, 1e-9);
    CHECK(r1.found);
    CHECK(r1.m == 1);
    CHECK(r1.n == 1);

    auto r2 = resonance_detect(0.75, 1.0, 10, 1e-9);
    CHECK(r2.found);
    CHECK(r2.m == 3);
    CHECK(r2.n == 4);

    auto r3 = resonance_detect(std::numbers::sqrt2, 1.0, 100, 1e-6);
    CHECK_FALSE(r3.found);
    // 140/99 beats the convergent 99/70 by ~4e-9 for the double nearest sqrt(2)
    CHECK(r3.m == 140);
    CHECK(r3.n == 99);
    CHECK(r3.abs_error == Catch::Approx(7.2e-5).epsilon(0.05));

    auto r4 = resonance_detect(0.6, 1.0, 10, 1e-9);
    CHECK(r4.found);
    CHECK(r4.m == 3);
    CHECK(r4.n == 5);
}

TEST_CASE("negative ratio puts the sign on n") {
    auto r = resonance_detect(-0.75, 1.0, 10, 1e-9);
    CHECK(r.found);
    CHECK(r.m == 3);
    CHECK(r.n == -4);
}

TEST_CASE("zero rotor velocity is never resonant") {
    auto r = resonance_detect(0.0, 1.0, 10, 1e-9);
    CHECK_FALSE(r.found);
    CHECK(r.m == 0);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(resonance_detect(1.0, 0.0, 10, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(resonance_detect(1.0, 1.0, 0, 1e-9), std::invalid_argument);
    CHECK_THROWS_AS(resonance_detect(1.0, 1.0, 10, 0.0), std::invalid_argument);
}

TEST_CASE("continued fractions match the brute-force oracle on 1000 cases") {
    std::mt19937 rng(314159);
    std::uniform_real_distribution<double> ratio_dist(0.0, 8.0);
    std::uniform_int_distribution<long> den_dist(1, 200);
    for (int i = 0; i < 1000; ++i) {
        double x = ratio_dist(rng);
        long max_den = den_dist(rng);
        if (i % 5 == 0) {
            // exercise exactly-rational inputs too
            long q = den_dist(rng);
            x = double(std::uniform_int_distribution<long>(0, 5 * q)(rng)) / double(q);
        }
        auto cf = detail::best_rational(x, max_den);
        auto bf = brute_force_best(x, max_den);
        CAPTURE(x, max_den);
        CHECK(cf == bf);
    }
}

TEST_CASE("found results are coprime and within the denominator bound") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> ratio_dist(0.01, 6.0);
    for (int i = 0; i < 200; ++i) {
        double omega = 0.5 + ratio_dist(rng) / 4;
        auto r = resonance_detect(ratio_dist(rng), omega, 50, 1e-2);
        if (!r.found) continue;
        CHECK(std::gcd(r.m, std::abs(r.n)) == 1);
        CHECK(std::abs(r.n) <= 50);
        CHECK(r.abs_error <= 1e-2);
    }
}

TEST_CASE("conservation scan: resonance flag and drift") {
    Parameters p;  // M = 1, w = 1, I = 1/12

    ExactState s_res{1, 0, 0, 0, 1, Rational(1, 12)};  // p_theta = I w: Omega = w
    auto scan = conservation_scan(PotentialSpec::isotropic(), p, s_res,
                                  {{1, 1}, {1, 2}, {2, 1}}, 10 * 2 * std::numbers::pi);
    CHECK(scan.at({1, 1}).resonant);
    CHECK(scan.at({1, 1}).drift <= 1e-10 * std::max(1.0, scan.at({1, 1}).initial_abs));
    CHECK_FALSE(scan.at({1, 2}).resonant);
    CHECK(scan.at({1, 2}).drift > 0.5 * scan.at({1, 2}).initial_abs);
    CHECK_FALSE(scan.at({2, 1}).resonant);

    ExactState s_2w{1, 0, 0, 0, 1, Rational(1, 6)};  // Omega = 2w: (2,1) resonant
    auto scan2 = conservation_scan(PotentialSpec::isotropic(), p, s_2w, {{2, 1}, {1, 1}},
                                   10 * 2 * std::numbers::pi);
    CHECK(scan2.at({2, 1}).resonant);
    CHECK(scan2.at({2, 1}).drift <= 1e-10 * std::max(1.0, scan2.at({2, 1}).initial_abs));
    CHECK_FALSE(scan2.at({1, 1}).resonant);
}

TEST_CASE("scan flag equals exact resonance detection at tol ~ 0") {
    Parameters p;
    for (auto [mult, mn] : {std::pair{Rational(1), std::pair{1L, 1L}}, {Rational(2), {2L, 1L}},
                            {Rational(1, 2), {1L, 2L}}, {Rational(3, 2), {3L, 2L}}}) {
        ExactState s{1, 0, 0, 0, 1, mult * p.inertia * p.omega};
        auto scan = conservation_scan(PotentialSpec::isotropic(), p, s, {mn}, 1.0);
        auto det = resonance_detect(to_double(s.ptheta / p.inertia), to_double(p.omega), 10, 1e-12);
        bool detector_match = det.found && det.m == mn.first && det.n == mn.second;
        CHECK(scan.at(mn).resonant == detector_match);
    }
}

TEST_CASE("|K| is conserved along every analytic isotropic trajectory") {
    Parameters p;
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        PhaseState s0{d(rng), d(rng), d(rng), d(rng), d(rng), 0.05 + 0.2 * std::abs(d(rng))};
        Observable k = builders::resonance_k(2, 3, p);
        double k0 = std::abs(evaluate(k, s0));
        double worst = 0;
        for (int i = 0; i <= 500; ++i) {
            PhaseState s = analytic_flow(p, AlgebraVariant::Isotropic, s0, i * 0.05);
            worst = std::max(worst, std::abs(std::abs(evaluate(k, s)) - k0));
        }
        CHECK(worst <= 1e-10 * std::max(1.0, k0));
    }
}
