#include "bspace/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "bspace/manifold.hpp"
#include "bspace/numerics.hpp"
#include "bspace/spectral.hpp"

namespace bspace::quantum {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kIvpTol = 1e-10;

// Recorded IVP solution for y'' = -w(t) y with cubic Hermite evaluation
// between samples. The state is (y, y'), so sample derivatives are exact.
struct OdeSolution {
    std::vector<double> ts;
    std::vector<double> ys;
    std::vector<double> yps;

    static OdeSolution solve(const std::function<double(double)>& w,
                             double t_end, double max_step) {
        OdeRhs rhs = [&w](double t, const std::vector<double>& y,
                          std::vector<double>& dy) {
            dy[0] = y[1];
            dy[1] = -w(t) * y[0];
        };
        IvpOptions opt;
        opt.tol = kIvpTol;
        opt.record = true;
        opt.max_step = max_step;
        IvpResult r = solve_ivp(rhs, {0.0, 1.0}, 0.0, t_end, opt);
        OdeSolution sol;
        sol.ts.reserve(r.samples.size());
        for (const auto& s : r.samples) {
            sol.ts.push_back(s.t);
            sol.ys.push_back(s.y[0]);
            sol.yps.push_back(s.y[1]);
        }
        return sol;
    }

    double eval(double t) const {
        if (t <= ts.front())
            return ys.front();
        if (t >= ts.back())
            return ys.back();
        auto it = std::upper_bound(ts.begin(), ts.end(), t);
        const std::size_t j = static_cast<std::size_t>(it - ts.begin());
        const double t0 = ts[j - 1], t1 = ts[j];
        const double h = t1 - t0;
        const double u = (t - t0) / h;
        const double y0 = ys[j - 1], y1 = ys[j];
        const double d0 = yps[j - 1] * h, d1 = yps[j] * h;
        const double u2 = u * u, u3 = u2 * u;
        return (2 * u3 - 3 * u2 + 1) * y0 + (u3 - 2 * u2 + u) * d0 +
               (-2 * u3 + 3 * u2) * y1 + (u3 - u2) * d1;
    }

    // Interior sign changes on (0, t_end), skipping near-zero samples so the
    // Dirichlet endpoints are not miscounted.
    int interior_nodes() const {
        double peak = 0.0;
        for (double y : ys)
            peak = std::max(peak, std::abs(y));
        const double eps = 1e-9 * peak;
        int nodes = 0;
        double prev = 0.0;
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            const double y = ys[i];
            if (std::abs(y) <= eps)
                continue;
            if (prev != 0.0 && y * prev < 0.0)
                ++nodes;
            prev = y;
        }
        return nodes;
    }
};

// Effective frequency function for the Schroedinger shooting problem:
// psi'' = (2m/hbar^2)(V - E) psi, i.e. w(theta) = (2m/hbar^2)(E - V).
std::function<double(double)> schroedinger_w(const PhysicalParams& p,
                                             const std::function<double(double)>& V,
                                             double E) {
    const double c = 2.0 * p.m / (p.hbar * p.hbar);
    return [c, &V, E](double theta) { return c * (E - V(theta)); };
}

double shoot_boundary(const PhysicalParams& p, const std::function<double(double)>& V,
                      double E) {
    auto w = schroedinger_w(p, V, E);
    OdeRhs rhs = [&w](double t, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = -w(t) * y[0];
    };
    IvpOptions opt;
    opt.tol = kIvpTol;
    IvpResult r = solve_ivp(rhs, {0.0, 1.0}, 0.0, kPi, opt);
    return r.y[0];
}

// Pruefer phase phi(pi) of the shooting solution: y = r sin(phi),
// y' = r cos(phi). phi increases through every multiple of pi, so
// floor(phi(pi)/pi) counts eigenvalues below E without the exponential
// amplitude swings of direct shooting.
double pruefer_phase(const PhysicalParams& p, const std::function<double(double)>& V,
                     double E) {
    auto w = schroedinger_w(p, V, E);
    OdeRhs rhs = [&w](double t, const std::vector<double>& y, std::vector<double>& dy) {
        const double s = std::sin(y[0]), c = std::cos(y[0]);
        dy[0] = c * c + w(t) * s * s;
    };
    IvpOptions opt;
    opt.tol = kIvpTol;
    return solve_ivp(rhs, {0.0}, 0.0, kPi, opt).y[0];
}

double sampled_min(const std::function<double(double)>& V) {
    double vmin = V(kPi / 2);
    for (int i = 0; i <= 1000; ++i)
        vmin = std::min(vmin, V(kPi * (i + 0.5) / 1001.0));
    return vmin;
}

double sampled_mean(const std::function<double(double)>& V) {
    return integrate(V, 0.0, kPi, 1e-10) / kPi;
}

// Find the lowest n_max Dirichlet eigenvalues by scanning the boundary value
// in kappa = sqrt(2m(E - Vmin))/hbar, where consecutive zeros are at least
// about unit-spaced, then Brent-refining each sign change. The node count of
// every accepted level is audited; on a miscount the scan is repeated with a
// finer step.
std::vector<double> find_levels(const PhysicalParams& p,
                                const std::function<double(double)>& V, int n_max) {
    if (n_max < 1)
        throw std::domain_error("find_levels: n_max must be >= 1");
    const double vmin = sampled_min(V);
    auto E_of_kappa = [&](double kappa) {
        return vmin + p.hbar * p.hbar * kappa * kappa / (2.0 * p.m);
    };
    auto f = [&](double E) { return shoot_boundary(p, V, E); };

    double step = 0.3;
    for (int attempt = 0; attempt < 4; ++attempt, step *= 0.5) {
        std::vector<double> levels;
        double kappa = 0.02;
        double E_prev = E_of_kappa(kappa);
        double f_prev = f(E_prev);
        const double kappa_limit = n_max + 25.0;
        bool audit_ok = true;
        while (static_cast<int>(levels.size()) < n_max && kappa < kappa_limit) {
            kappa += step;
            const double E = E_of_kappa(kappa);
            const double fv = f(E);
            if (f_prev * fv < 0.0) {
                const double root =
                    find_root(f, Bracket(E_prev, E, f_prev, fv), 1e-10);
                // Audit: level n must cross the n*pi phase threshold. The
                // phase jumps almost discontinuously when theta = pi lies in
                // a forbidden region, so check both sides of the root rather
                // than the (ambiguous) value at the root itself.
                const int want = static_cast<int>(levels.size()); // nodes of next level
                const double eps = 1e-7 * (1.0 + std::abs(root));
                const int below =
                    static_cast<int>(std::floor(pruefer_phase(p, V, root - eps) / kPi));
                const int above =
                    static_cast<int>(std::floor(pruefer_phase(p, V, root + eps) / kPi));
                if (below != want || above != want + 1) {
                    audit_ok = false;
                    break;
                }
                levels.push_back(root);
            }
            E_prev = E;
            f_prev = fv;
        }
        if (audit_ok && static_cast<int>(levels.size()) == n_max)
            return levels;
    }
    throw NumericsError("find_levels: eigenvalue search failed (node-count audit)");
}
} // namespace

void PhysicalParams::validate() const {
    if (!(m > 0.0))
        throw std::domain_error("PhysicalParams: m must be positive");
    if (!(k >= 0.0))
        throw std::domain_error("PhysicalParams: k must be nonnegative");
    if (!(hbar > 0.0))
        throw std::domain_error("PhysicalParams: hbar must be positive");
    manifold::check_interior(qprime, "qprime");
}

double free_particle_energy(const PhysicalParams& p, int n) {
    p.validate();
    if (n < 1)
        throw std::domain_error("free_particle_energy: n must be >= 1");
    return p.hbar * p.hbar * n * n / (2.0 * p.m);
}

std::function<double(double)> free_particle_wavefunction(int n) {
    if (n < 1)
        throw std::domain_error("free_particle_wavefunction: n must be >= 1");
    return [n](double q) { return spectral::psi(n, q); };
}

MathieuParams mathieu_params(const PhysicalParams& p, double E) {
    p.validate();
    const double h2 = p.hbar * p.hbar;
    return {(16.0 * p.m * E - p.k * p.m) / (8.0 * h2),
            p.k * p.m / (16.0 * h2)};
}

namespace {
double mathieu_ivp(const MathieuParams& mp, double theta, double tol, bool odd) {
    if (!std::isfinite(mp.a) || !std::isfinite(mp.q_M))
        throw std::domain_error("mathieu: parameters must be finite");
    if (theta == 0.0)
        return odd ? 0.0 : 1.0;
    OdeRhs rhs = [&mp](double t, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = y[1];
        dy[1] = -(mp.a - 2.0 * mp.q_M * std::cos(2.0 * t)) * y[0];
    };
    IvpOptions opt;
    opt.tol = std::min(tol, kIvpTol);
    std::vector<double> y0 = odd ? std::vector<double>{0.0, 1.0}
                                 : std::vector<double>{1.0, 0.0};
    return solve_ivp(rhs, y0, 0.0, theta, opt).y[0];
}
} // namespace

double mathieu_S(const MathieuParams& mp, double theta, double tol) {
    return mathieu_ivp(mp, theta, tol, true);
}

double mathieu_C(const MathieuParams& mp, double theta, double tol) {
    return mathieu_ivp(mp, theta, tol, false);
}

double oscillator_energy_condition(const PhysicalParams& p, double E) {
    return mathieu_S(mathieu_params(p, E), kPi);
}

double oscillator_levels_approx(const PhysicalParams& p, int n) {
    p.validate();
    if (n < 1)
        throw std::domain_error("oscillator_levels_approx: n must be >= 1");
    const double h2 = p.hbar * p.hbar;
    return (p.k * p.m + 8.0 * n * n * h2 + 16.0 * n * h2 + 8.0 * h2) / (16.0 * p.m);
}

double approx_condition(const PhysicalParams& p, double E) {
    p.validate();
    const double radicand = (32.0 * E * p.m - 2.0 * p.k * p.m) / (p.hbar * p.hbar);
    if (radicand < 0.0)
        throw std::domain_error("approx_condition: negative radicand");
    return std::cos(0.25 * kPi * (std::sqrt(radicand) - 2.0));
}

int count_nodes(const PhysicalParams& p, const std::function<double(double)>& V,
                double E) {
    const double ratio = pruefer_phase(p, V, E) / kPi;
    const double nearest = std::round(ratio);
    // At an eigenvalue phi(pi) = (nodes + 1) pi exactly; the boundary zero
    // is not an interior node.
    if (std::abs(ratio - nearest) < 1e-6)
        return static_cast<int>(nearest) - 1;
    return static_cast<int>(std::floor(ratio));
}

EnergySpectrum oscillator_levels(const PhysicalParams& p, int n_max) {
    p.validate();
    auto V = [&p](double theta) {
        const double c = std::cos(theta);
        return p.k / 8.0 * c * c;
    };
    std::vector<double> exact = find_levels(p, V, n_max);
    EnergySpectrum spec;
    spec.levels.reserve(exact.size());
    for (int n = 1; n <= n_max; ++n)
        spec.levels.push_back({n, exact[static_cast<std::size_t>(n - 1)],
                               oscillator_levels_approx(p, n), "root-found"});
    return spec;
}

std::function<double(double)> shooting_wavefunction(const PhysicalParams& p,
                                                    const std::function<double(double)>& V,
                                                    double E) {
    auto w = schroedinger_w(p, V, E);
    const double wmax = std::max(w(kPi / 2), std::max(w(0.01), w(kPi - 0.01)));
    const double max_step = 0.5 / std::sqrt(std::max(wmax, 4.0));
    auto sol = std::make_shared<OdeSolution>(OdeSolution::solve(w, kPi, max_step));
    // <psi, psi>_w over (0,1) equals the plain theta integral of psi^2.
    const double norm2 = integrate(
        [&sol](double th) { double y = sol->eval(th); return y * y; }, 0.0, kPi,
        1e-13);
    const double scale = 1.0 / std::sqrt(norm2);
    return [sol, scale](double q) {
        if (q <= 0.0 || q >= 1.0)
            return 0.0;
        return scale * sol->eval(2.0 * std::asin(std::sqrt(q)));
    };
}

std::function<double(double)> oscillator_wavefunction(const PhysicalParams& p, int n) {
    if (n < 1)
        throw std::domain_error("oscillator_wavefunction: n must be >= 1");
    EnergySpectrum spec = oscillator_levels(p, n);
    auto V = [p](double theta) {
        const double c = std::cos(theta);
        return p.k / 8.0 * c * c;
    };
    return shooting_wavefunction(p, V, spec.levels.back().E_exact);
}

std::pair<double, double> pendulum_map_residuals(double m, double g, double l,
                                                 double E, double hbar) {
    if (!(m > 0.0 && g > 0.0 && l > 0.0 && hbar > 0.0))
        throw std::domain_error("pendulum_map_residuals: inputs must be positive");
    const double h2 = hbar * hbar;
    const double k = 64.0 * m * g * l * l * l;
    const double r1 = k * m / (8.0 * h2) - 8.0 * m * m * g * l * l * l / h2;
    const double r2 = (16.0 * m * E - k * m) / (8.0 * h2) -
                      (8.0 * m * E * l * l - 8.0 * m * m * g * l * l * l) / h2;
    return {r1, r2};
}

EnergySpectrum shooting_solve(const PhysicalParams& p,
                              const std::function<double(double)>& V, int n_max) {
    p.validate();
    std::vector<double> exact = find_levels(p, V, n_max);
    const double vbar = sampled_mean(V);
    EnergySpectrum spec;
    spec.levels.reserve(exact.size());
    for (int n = 1; n <= n_max; ++n) {
        // First-order perturbation estimate as the paired approximation.
        const double approx = p.hbar * p.hbar * n * n / (2.0 * p.m) + vbar;
        spec.levels.push_back({n, exact[static_cast<std::size_t>(n - 1)], approx,
                               "root-found"});
    }
    return spec;
}

} // namespace bspace::quantum
