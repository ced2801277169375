#pragma once

#include <cmath>
#include <stdexcept>

// The Bernoulli information manifold: parameter q in (0,1) with the Fisher
// metric g = 1/(q(1-q)). The chart theta = 2 asin(sqrt(q)) maps it
// isometrically onto the flat interval (0, pi).

namespace bspace::manifold {

// Hard guard distance from the chart singularities at q = 0 and q = 1.
inline constexpr double kDomainGuard = 1e-15;

inline void check_interior(double q, const char* what = "q") {
    if (!(q > kDomainGuard && q < 1.0 - kDomainGuard))
        throw std::domain_error(std::string(what) + " must lie strictly inside (0,1)");
}

inline void check_theta(double theta) {
    constexpr double pi = 3.14159265358979323846;
    if (!(theta > kDomainGuard && theta < pi - kDomainGuard))
        throw std::domain_error("theta must lie strictly inside (0,pi)");
}

// Fisher metric coefficient g(q) = 1/(q(1-q)); minimum 4 at q = 1/2.
inline double fisher_metric(double q) {
    check_interior(q);
    return 1.0 / (q * (1.0 - q));
}

inline double to_theta(double q) {
    check_interior(q);
    return 2.0 * std::asin(std::sqrt(q));
}

inline double from_theta(double theta) {
    check_theta(theta);
    double s = std::sin(0.5 * theta);
    return s * s;
}

// D_KL(a | b) for Bernoulli distributions, in nats.
inline double kl_divergence(double a, double b) {
    check_interior(a, "a");
    check_interior(b, "b");
    return a * std::log(a / b) + (1.0 - a) * std::log((1.0 - a) / (1.0 - b));
}

// The quadratic stand-in (qprime - q)^2 used as the oscillator potential.
inline double kl_quadratic(double qprime, double q) {
    check_interior(qprime, "qprime");
    check_interior(q);
    double d = qprime - q;
    return d * d;
}

// Geodesic square distance: half the squared theta-chart separation.
inline double geodesic_sqdist(double q1, double q2) {
    double d = to_theta(q1) - to_theta(q2);
    return 0.5 * d * d;
}

} // namespace bspace::manifold
