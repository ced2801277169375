#include <doctest.h>

#include <cmath>
#include <random>

#include "bspace/numerics.hpp"

using namespace bspace;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("integrate_weighted: constant integrand gives pi") {
    CHECK(integrate_weighted([](double) { return 1.0; }, 1e-12) ==
          doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("integrate_weighted: f = q gives pi/2") {
    // Oracle: closed-form integral of sin^2(theta/2) over (0, pi).
    CHECK(integrate_weighted([](double q) { return q; }, 1e-12) ==
          doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("integrate_weighted: Psi_1 squared is normalized") {
    auto f = [](double q) {
        const double s = std::sqrt(2.0 / kPi) * std::sin(2.0 * std::asin(std::sqrt(q)));
        return s * s;
    };
    CHECK(integrate_weighted(f, 1e-12) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("integrate_weighted: linearity on random smooth functions") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 10; ++trial) {
        const double alpha = coef(rng), beta = coef(rng);
        const double w1 = coef(rng), w2 = coef(rng);
        auto f = [w1](double q) { return std::exp(w1 * q); };
        auto g = [w2](double q) { return std::cos(w2 * q) + q * q; };
        auto combo = [&](double q) { return alpha * f(q) + beta * g(q); };
        const double lhs = integrate_weighted(combo, 1e-12);
        const double rhs = alpha * integrate_weighted(f, 1e-12) +
                           beta * integrate_weighted(g, 1e-12);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("integrate_weighted: non-finite sample reported") {
    auto bad = [](double q) { return (q > 0.4 && q < 0.6) ? std::nan("") : 1.0; };
    CHECK_THROWS_AS(integrate_weighted(bad, 1e-12), NumericsError);
}

TEST_CASE("solve_ivp: constant field") {
    OdeRhs rhs = [](double, const std::vector<double>&, std::vector<double>& dy) {
        dy[0] = 0.0;
    };
    auto r = solve_ivp(rhs, {3.0}, 0.0, 1.0, {.tol = 1e-10});
    CHECK(r.y[0] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("solve_ivp: harmonic oscillator hits sine values") {
    OdeRhs rhs = [](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
    };
    auto r = solve_ivp(rhs, {0.0, 1.0}, 0.0, kPi / 2, {.tol = 1e-10});
    CHECK(std::abs(r.y[0] - 1.0) < 1e-9);
}

TEST_CASE("solve_ivp: y'' = -4y matches sin(2t)/2") {
    OdeRhs rhs = [](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = -4.0 * y[0];
    };
    const double tol = 1e-9;
    auto r = solve_ivp(rhs, {0.0, 1.0}, 0.0, kPi, {.tol = tol});
    CHECK(std::abs(r.y[0] - 0.0) < 10 * tol);
}

TEST_CASE("solve_ivp: harmonic invariant conserved to 100*tol over [0,10]") {
    const double omega = 3.0;
    OdeRhs rhs = [omega](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = -omega * omega * y[0];
    };
    const double tol = 1e-10;
    IvpOptions opt;
    opt.tol = tol;
    opt.record = true;
    auto r = solve_ivp(rhs, {0.5, 0.25}, 0.0, 10.0, opt);
    const double inv0 = 0.5 * 0.5 + (0.25 / omega) * (0.25 / omega);
    for (const auto& s : r.samples) {
        const double inv = s.y[0] * s.y[0] + (s.y[1] / omega) * (s.y[1] / omega);
        CHECK(std::abs(inv - inv0) < 100 * tol);
    }
}

TEST_CASE("solve_ivp: divergence detected") {
    OdeRhs rhs = [](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[0] * y[0]; // blows up in finite time
    };
    CHECK_THROWS_AS(solve_ivp(rhs, {1.0}, 0.0, 5.0, {.tol = 1e-8}), NumericsError);
}

TEST_CASE("find_root: linear function") {
    auto f = [](double x) { return x - 2.0; };
    CHECK(find_root(f, Bracket::from(f, 0.0, 5.0), 1e-12) ==
          doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("find_root: zero of sine near pi") {
    auto f = [](double x) { return std::sin(x); };
    CHECK(find_root(f, Bracket::from(f, 3.0, 3.5), 1e-13) ==
          doctest::Approx(kPi).epsilon(1e-13));
}

TEST_CASE("find_root: result stays inside the bracket") {
    auto f = [](double x) { return std::cos(3.0 * x) + 0.1 * x; };
    const double lo = 0.3, hi = 0.8;
    const double x = find_root(f, Bracket::from(f, lo, hi), 1e-12);
    CHECK(x >= lo);
    CHECK(x <= hi);
    CHECK(std::abs(f(x)) < 1e-10);
}

TEST_CASE("Bracket: missing sign change rejected") {
    auto f = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(Bracket::from(f, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Bracket(1.0, 0.0, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("finite_diff_second: exact for quadratics") {
    auto f = [](double x) { return x * x; };
    CHECK(std::abs(finite_diff_second(f, 0.7, 1e-3) - 2.0) < 1e-6);
}

TEST_CASE("finite_diff_second: sine values") {
    CHECK(std::abs(finite_diff_second([](double x) { return std::sin(x); }, 0.0, 1e-4)) <
          1e-6);
    CHECK(std::abs(finite_diff_second([](double x) { return std::sin(x); }, kPi / 2,
                                      1e-4) +
                   1.0) < 1e-6);
}

TEST_CASE("finite_diff_second: order h^2 on exp") {
    auto f = [](double x) { return std::exp(x); };
    const double x = 0.3;
    const double exact = std::exp(x);
    const double e1 = std::abs(finite_diff_second(f, x, 4e-3) - exact);
    const double e2 = std::abs(finite_diff_second(f, x, 2e-3) - exact);
    const double e3 = std::abs(finite_diff_second(f, x, 1e-3) - exact);
    CHECK(e1 / e2 == doctest::Approx(4.0).epsilon(0.15));
    CHECK(e2 / e3 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("Grid: invariants enforced") {
    CHECK_THROWS_AS(Grid({}, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid({0.2, 0.2}, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Grid({0.0, 0.5}, 0.0, 1.0), std::invalid_argument);
    const Grid g = Grid::uniform_interior(0.0, 1.0, 5);
    CHECK(g.size() == 5);
    CHECK(g.points.front() > 0.0);
    CHECK(g.points.back() < 1.0);
}
