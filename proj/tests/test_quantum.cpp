#include <doctest.h>

#include <cmath>

#include "bspace/numerics.hpp"
#include "bspace/quantum.hpp"
#include "bspace/spectral.hpp"

using namespace bspace;
using quantum::PhysicalParams;

namespace {
constexpr double kPi = 3.14159265358979323846;

PhysicalParams fig3_params() { return {8.0, 8.0, 1.0, 0.5}; }

// Frozen with an independent adaptive-RK + Brent pipeline (SciPy, rtol 2.5e-14).
constexpr double kFig3Levels[5] = {0.23380106871494, 0.67168006419954,
                                   1.07884038325665, 1.52825220563305,
                                   2.08315905448584};
} // namespace

TEST_CASE("free_particle_energy: formula and scaling") {
    PhysicalParams p{1.0, 0.0, 1.0, 0.5};
    CHECK(quantum::free_particle_energy(p, 1) == doctest::Approx(0.5));
    CHECK(quantum::free_particle_energy(p, 3) == doctest::Approx(4.5));
    PhysicalParams p2 = p;
    p2.m = 2.0;
    for (int n = 1; n <= 5; ++n)
        CHECK(quantum::free_particle_energy(p2, n) ==
              doctest::Approx(0.5 * quantum::free_particle_energy(p, n)));
    CHECK_THROWS_AS(quantum::free_particle_energy(p, 0), std::domain_error);
}

TEST_CASE("free_particle_wavefunction equals the spectral eigenbasis") {
    auto psi3 = quantum::free_particle_wavefunction(3);
    for (double q = 0.05; q < 1.0; q += 0.09)
        CHECK(psi3(q) == doctest::Approx(spectral::psi(3, q)));
    const double norm = integrate_weighted(
        [&psi3](double q) { return psi3(q) * psi3(q); }, 1e-12);
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(psi3(1e-13)) < 1e-5);
    CHECK(std::abs(psi3(1.0 - 1e-13)) < 1e-5);
}

TEST_CASE("mathieu_params: the canonical map") {
    PhysicalParams p = fig3_params();
    const auto mp = quantum::mathieu_params(p, 1.0);
    CHECK(mp.a == doctest::Approx(8.0));
    CHECK(mp.q_M == doctest::Approx(4.0));

    PhysicalParams free{2.0, 0.0, 1.0, 0.5};
    const auto mp0 = quantum::mathieu_params(free, 1.5);
    CHECK(mp0.a == doctest::Approx(2.0 * 2.0 * 1.5)); // 2mE/hbar^2
    CHECK(mp0.q_M == 0.0);

    // a is affine in E with slope 2m/hbar^2
    const double slope = (quantum::mathieu_params(p, 2.0).a -
                          quantum::mathieu_params(p, 1.0).a);
    CHECK(slope == doctest::Approx(2.0 * p.m / (p.hbar * p.hbar)));
}

TEST_CASE("mathieu_S and mathieu_C: trigonometric reduction at q_M = 0") {
    // a = 4: S(theta) = sin(2 theta)/2
    CHECK(std::abs(quantum::mathieu_S({4.0, 0.0}, kPi)) < 1e-9);
    CHECK(quantum::mathieu_S({4.0, 0.0}, kPi / 4) ==
          doctest::Approx(0.5).epsilon(1e-9));
    // a = 1: S = sin
    CHECK(quantum::mathieu_S({1.0, 0.0}, kPi / 2) == doctest::Approx(1.0).epsilon(1e-9));
    // C initial condition
    CHECK(quantum::mathieu_C({3.7, 2.2}, 0.0) == doctest::Approx(1.0));
    CHECK(quantum::mathieu_C({1.0, 0.0}, kPi / 3) ==
          doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("oscillator_energy_condition: free-particle reduction") {
    PhysicalParams p{2.0, 0.0, 1.0, 0.5};
    for (int n = 1; n <= 4; ++n) {
        const double En = quantum::free_particle_energy(p, n);
        CHECK(std::abs(quantum::oscillator_energy_condition(p, En)) < 1e-8);
        // strictly between consecutive levels the condition is nonzero
        const double mid = 0.5 * (En + quantum::free_particle_energy(p, n + 1));
        CHECK(std::abs(quantum::oscillator_energy_condition(p, mid)) > 1e-3);
    }
}

TEST_CASE("oscillator_energy_condition: sign change near the printed approximation") {
    PhysicalParams p = fig3_params();
    const double seed = quantum::oscillator_levels_approx(p, 1);
    CHECK(seed == doctest::Approx(0.75));
    const double lo = 0.75 * seed, hi = 1.25 * seed;
    CHECK(quantum::oscillator_energy_condition(p, lo) *
              quantum::oscillator_energy_condition(p, hi) <
          0.0);
}

TEST_CASE("oscillator_levels_approx: printed formula") {
    PhysicalParams p = fig3_params();
    CHECK(quantum::oscillator_levels_approx(p, 1) == doctest::Approx(0.75));
    CHECK(quantum::oscillator_levels_approx(p, 2) == doctest::Approx(17.0 / 16.0));
    PhysicalParams free{3.0, 0.0, 1.0, 0.5};
    const double r = quantum::oscillator_levels_approx(free, 400) /
                     quantum::free_particle_energy(free, 400);
    CHECK(r == doctest::Approx(1.0).epsilon(6e-3));
}

TEST_CASE("approx_condition: zeros at the approximate levels") {
    PhysicalParams p = fig3_params();
    for (int n = 1; n <= 6; ++n)
        CHECK(std::abs(quantum::approx_condition(
                  p, quantum::oscillator_levels_approx(p, n))) < 1e-12);
    PhysicalParams free{2.0, 0.0, 1.0, 0.5};
    for (int n = 1; n <= 4; ++n) {
        const double E = quantum::free_particle_energy(free, n + 1);
        CHECK(std::abs(quantum::approx_condition(free, E)) < 1e-12);
    }
    CHECK_THROWS_AS(quantum::approx_condition(p, 0.0), std::domain_error);
}

TEST_CASE("oscillator_levels: free-particle reduction") {
    PhysicalParams p{8.0, 0.0, 1.0, 0.5};
    const auto spec = quantum::oscillator_levels(p, 6);
    for (const auto& lv : spec.levels)
        CHECK(std::abs(lv.E_exact - quantum::free_particle_energy(p, lv.n)) < 1e-9);
}

TEST_CASE("oscillator_levels: frozen Fig.-3 regime values") {
    PhysicalParams p = fig3_params();
    const auto spec = quantum::oscillator_levels(p, 5);
    for (int i = 0; i < 5; ++i) {
        CHECK(spec.levels[i].E_exact ==
              doctest::Approx(kFig3Levels[i]).epsilon(1e-8));
        CHECK(spec.levels[i].method == "root-found");
    }
    // condition value at a non-eigenvalue energy, frozen with the same oracle
    CHECK(quantum::oscillator_energy_condition(p, 1.0) ==
          doctest::Approx(0.57804148373821).epsilon(1e-8));
}

TEST_CASE("oscillator_levels: asymptotic trend toward n^2 hbar^2 / 2m") {
    PhysicalParams p = fig3_params();
    const auto spec = quantum::oscillator_levels(p, 16);
    double prev_ratio = 1e9;
    for (const auto& lv : spec.levels) {
        const double ratio = lv.E_exact / quantum::free_particle_energy(p, lv.n);
        CHECK(ratio > 1.0);
        CHECK(ratio < prev_ratio);
        prev_ratio = ratio;
    }
    // 8/n^2 first-order tail: under 5% only from n = 13 on in this regime
    CHECK(spec.levels[15].E_exact ==
          doctest::Approx(quantum::free_particle_energy(p, 16)).epsilon(0.05));
}

TEST_CASE("oscillator_levels: small-k perturbation shift") {
    PhysicalParams p{8.0, 1e-3, 1.0, 0.5};
    const auto spec = quantum::oscillator_levels(p, 6);
    for (const auto& lv : spec.levels) {
        // First-order shift (k/8) <cos^2 theta>_n: k/32 for n = 1, k/16 above.
        const double shift = (lv.n == 1) ? p.k / 32.0 : p.k / 16.0;
        CHECK(std::abs(lv.E_exact - quantum::free_particle_energy(p, lv.n) - shift) <
              1e-7);
    }
}

TEST_CASE("oscillator_levels: monotone in n and in k") {
    PhysicalParams p = fig3_params();
    const auto spec = quantum::oscillator_levels(p, 8);
    for (std::size_t i = 1; i < spec.levels.size(); ++i)
        CHECK(spec.levels[i].E_exact > spec.levels[i - 1].E_exact);

    PhysicalParams stiffer = p;
    stiffer.k = 12.0;
    const auto spec2 = quantum::oscillator_levels(stiffer, 8);
    for (std::size_t i = 0; i < spec.levels.size(); ++i)
        CHECK(spec2.levels[i].E_exact > spec.levels[i].E_exact);
}

TEST_CASE("oscillator_wavefunction: Dirichlet ends, node count, free reduction") {
    PhysicalParams p = fig3_params();
    for (int n : {1, 2, 3}) {
        auto psi = quantum::oscillator_wavefunction(p, n);
        // theta(1e-9) ~ 6e-5, and the wavefunction vanishes linearly in theta
        CHECK(std::abs(psi(1e-9)) < 1e-3);
        CHECK(std::abs(psi(1.0 - 1e-9)) < 1e-3);
        // count interior zeros on a fine grid
        int nodes = 0;
        double prev = psi(0.002);
        for (double q = 0.004; q < 0.999; q += 0.002) {
            const double v = psi(q);
            if (prev != 0.0 && v * prev < 0.0)
                ++nodes;
            prev = v;
        }
        CHECK(nodes == n - 1);
        // normalization under the weighted inner product
        const double norm = integrate_weighted(
            [&psi](double q) { return psi(q) * psi(q); }, 1e-10);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-8));
    }

    PhysicalParams free{8.0, 0.0, 1.0, 0.5};
    auto psi2 = quantum::oscillator_wavefunction(free, 2);
    for (double q = 0.1; q < 1.0; q += 0.17)
        CHECK(std::abs(psi2(q) - spectral::psi(2, q)) < 1e-8);
}

TEST_CASE("oscillator wavefunctions are orthogonal") {
    PhysicalParams p = fig3_params();
    std::vector<std::function<double(double)>> fns;
    for (int n = 1; n <= 4; ++n)
        fns.push_back(quantum::oscillator_wavefunction(p, n));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const double ip = integrate_weighted(
                [&](double q) { return fns[i](q) * fns[j](q); }, 1e-10);
            CHECK(std::abs(ip) < 1e-6);
        }
}

TEST_CASE("pendulum_map_residuals: l = 1/2 is forced") {
    CHECK(quantum::pendulum_map_residuals(2.0, 9.8, 0.5, 0.1).first == 0.0);
    for (double E : {0.1, 1.0, 10.0}) {
        const auto [r1, r2] = quantum::pendulum_map_residuals(1.7, 3.3, 0.5, E);
        CHECK(std::abs(r1) < 1e-14);
        CHECK(std::abs(r2) < 1e-12);
    }
    const auto off = quantum::pendulum_map_residuals(1.0, 9.8, 0.6, 1.0);
    CHECK(std::abs(off.second) > 1e-3);
}

TEST_CASE("shooting_solve: free spectrum and cross-check against the Mathieu path") {
    PhysicalParams p = fig3_params();
    auto zero = [](double) { return 0.0; };
    const auto free_spec = quantum::shooting_solve(p, zero, 5);
    for (const auto& lv : free_spec.levels)
        CHECK(std::abs(lv.E_exact - quantum::free_particle_energy(p, lv.n)) <
              1e-8 * quantum::free_particle_energy(p, lv.n));

    auto cos2 = [&p](double th) {
        const double c = std::cos(th);
        return p.k / 8.0 * c * c;
    };
    const auto vs = quantum::shooting_solve(p, cos2, 5);
    const auto mathieu = quantum::oscillator_levels(p, 5);
    for (int i = 0; i < 5; ++i)
        CHECK(std::abs(vs.levels[i].E_exact - mathieu.levels[i].E_exact) <
              1e-8 * mathieu.levels[i].E_exact);
}

TEST_CASE("shooting_solve: narrow harmonic well approaches hbar*omega*(n - 1/2)") {
    PhysicalParams p{1.0, 0.0, 1.0, 0.5};
    const double K = 400.0;
    auto V = [K](double th) {
        const double d = th - kPi / 2;
        return 0.5 * K * d * d;
    };
    const auto spec = quantum::shooting_solve(p, V, 3);
    const double omega = std::sqrt(K / p.m);
    for (const auto& lv : spec.levels)
        CHECK(std::abs(lv.E_exact - p.hbar * omega * (lv.n - 0.5)) <
              0.01 * lv.E_exact);
}
