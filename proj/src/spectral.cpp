#include "bspace/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "bspace/manifold.hpp"
#include "bspace/numerics.hpp"

namespace bspace::spectral {

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kNorm = std::sqrt(2.0 / kPi);
} // namespace

double psi_theta(int n, double theta) {
    if (n < 1)
        throw std::domain_error("psi: mode index must be >= 1");
    return kNorm * std::sin(n * theta);
}

double psi(int n, double q) {
    if (n < 1)
        throw std::domain_error("psi: mode index must be >= 1");
    if (q <= 0.0 || q >= 1.0)
        return 0.0; // continuous Dirichlet extension
    return kNorm * std::sin(2.0 * n * std::asin(std::sqrt(q)));
}

double laplace_beltrami(const std::function<double(double)>& f, double q, double h) {
    const double theta = manifold::to_theta(q);
    auto pullback = [&f](double th) { return f(manifold::from_theta(th)); };
    return finite_diff_second(pullback, theta, h);
}

double SpectralExpansion::coeff_norm2() const {
    double s = 0.0;
    for (const auto& m : modes)
        s += m.coeff * m.coeff;
    return std::sqrt(s);
}

double ComplexExpansion::coeff_norm2() const {
    double s = 0.0;
    for (const auto& m : modes)
        s += std::norm(m.coeff);
    return std::sqrt(s);
}

SpectralExpansion expand(const std::function<double(double)>& f, int n_max, double tol) {
    if (n_max < 1)
        throw std::domain_error("expand: n_max must be >= 1");
    SpectralExpansion e;
    e.modes.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        auto integrand = [&f, n](double q) { return f(q) * psi(n, q); };
        e.modes.push_back({n, integrate_weighted(integrand, tol)});
    }
    return e;
}

double evaluate(const SpectralExpansion& e, double q) {
    double s = 0.0;
    for (const auto& m : e.modes)
        s += m.coeff * psi(m.n, q);
    return s;
}

std::complex<double> evaluate(const ComplexExpansion& e, double q) {
    std::complex<double> s = 0.0;
    for (const auto& m : e.modes)
        s += m.coeff * psi(m.n, q);
    return s;
}

SpectralExpansion heat_evolve(const SpectralExpansion& e0, double t, HeatDecayLaw law) {
    if (t < 0.0)
        throw std::domain_error("heat_evolve: t must be nonnegative");
    SpectralExpansion e = e0;
    for (auto& m : e.modes) {
        const double rate =
            (law == HeatDecayLaw::Consistent) ? static_cast<double>(m.n) * m.n
                                              : static_cast<double>(m.n);
        m.coeff *= std::exp(-rate * t);
    }
    return e;
}

ComplexExpansion wave_evolve(const SpectralExpansion& e0, double t) {
    ComplexExpansion e;
    e.modes.reserve(e0.modes.size());
    for (const auto& m : e0.modes)
        e.modes.push_back({m.n, m.coeff * std::exp(std::complex<double>(0.0, -m.n * t))});
    return e;
}

ComplexExpansion wave_evolve(const ComplexExpansion& e0, double t) {
    ComplexExpansion e = e0;
    for (auto& m : e.modes)
        m.coeff *= std::exp(std::complex<double>(0.0, -m.n * t));
    return e;
}

double greens_series(double q, double qprime, int n_terms) {
    manifold::check_interior(q);
    manifold::check_interior(qprime, "qprime");
    if (n_terms < 1)
        throw std::domain_error("greens_series: need at least one term");
    const double th = 2.0 * std::asin(std::sqrt(q));
    const double thp = 2.0 * std::asin(std::sqrt(qprime));
    double s = 0.0;
    for (int n = n_terms; n >= 1; --n) // small terms first
        s += std::sin(n * th) * std::sin(n * thp) / (static_cast<double>(n) * n);
    return s * (2.0 / kPi);
}

double greens_closed(double q, double qprime) {
    manifold::check_interior(q);
    manifold::check_interior(qprime, "qprime");
    const double asq = std::asin(std::sqrt(q));
    const double asqp = std::asin(std::sqrt(qprime));
    const double acqp = std::acos(std::sqrt(qprime));
    double g = 4.0 * acqp * asq / kPi;
    if (asq - asqp > 0.0) // Heaviside with H(0) = 0
        g += 2.0 * (asqp - asq);
    return g;
}

} // namespace bspace::spectral
