#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Shared numerical kernels: weighted quadrature, an adaptive RK45 IVP
// integrator, bracketed root-finding, and finite-difference derivatives.
// Everything here is domain-agnostic and pure.

namespace bspace {

class NumericsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A strictly increasing set of points in the open interval (lo, hi).
struct Grid {
    std::vector<double> points;
    double lo = 0.0;
    double hi = 1.0;

    Grid(std::vector<double> pts, double lo_, double hi_);

    // n points at lo+eps, ..., hi-eps, uniformly spaced.
    static Grid uniform_interior(double lo, double hi, int n, double eps = 1e-9);

    std::size_t size() const { return points.size(); }
};

// A sign-changing interval for root-finding. The constructor enforces
// lo < hi and f_lo * f_hi < 0.
struct Bracket {
    double lo, hi;
    double f_lo, f_hi;

    Bracket(double lo_, double hi_, double f_lo_, double f_hi_);

    static Bracket from(const std::function<double(double)>& f, double lo, double hi);
};

// Integral of f(q) / sqrt(q(1-q)) over (0,1), computed via q = sin^2(theta/2)
// so the integrand becomes f(q(theta)) on (0, pi) with no endpoint singularity.
double integrate_weighted(const std::function<double(double)>& f, double tol = 1e-12);

// Adaptive Gauss-Legendre quadrature of g over [a, b], absolute tolerance tol.
double integrate(const std::function<double(double)>& g, double a, double b,
                 double tol = 1e-12);

// Bracketed scalar root-finding (Brent). The result never leaves the bracket;
// the final interval width is <= tol.
double find_root(const std::function<double(double)>& f, Bracket bracket,
                 double tol = 1e-12);

// Central second difference (f(x-h) - 2 f(x) + f(x+h)) / h^2.
double finite_diff_second(const std::function<double(double)>& f, double x, double h);

// Right-hand side of an ODE system: rhs(t, y, dydt).
using OdeRhs = std::function<void(double, const std::vector<double>&, std::vector<double>&)>;

struct IvpOptions {
    double tol = 1e-10;      // absolute and relative local error per unit time
    bool record = false;     // keep (t, y) samples along the way
    double max_step = 0.0;   // 0 = unlimited
};

struct IvpSample {
    double t;
    std::vector<double> y;
};

struct IvpResult {
    std::vector<double> y;            // state at t_end
    std::vector<IvpSample> samples;   // present iff options.record
    std::size_t steps = 0;
};

// Adaptive Dormand-Prince RK45. Throws NumericsError on step-size underflow
// (stiffness) or when the state goes non-finite (divergence).
IvpResult solve_ivp(const OdeRhs& rhs, std::vector<double> y0,
                    double t0, double t1, const IvpOptions& options = {});

} // namespace bspace
