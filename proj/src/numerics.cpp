#include "bspace/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bspace {

namespace {
constexpr double kPi = 3.14159265358979323846;

// 12-point Gauss-Legendre nodes (positive half) and weights on [-1, 1].
constexpr double kGlNodes[6] = {
    0.1252334085114689154724414, 0.3678314989981801937526915,
    0.5873179542866174472967024, 0.7699026741943046870368938,
    0.9041172563704748566784659, 0.9815606342467192506905491};
constexpr double kGlWeights[6] = {
    0.2491470458134027850005624, 0.2334925365383548087608499,
    0.2031674267230659217490645, 0.1600783285433462263346525,
    0.1069393259953184309602547, 0.0471753363865118271946160};

double gl12(const std::function<double(double)>& g, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double x1 = c - h * kGlNodes[i];
        const double x2 = c + h * kGlNodes[i];
        const double g1 = g(x1);
        const double g2 = g(x2);
        if (!std::isfinite(g1))
            throw NumericsError("non-finite integrand sample at x = " + std::to_string(x1));
        if (!std::isfinite(g2))
            throw NumericsError("non-finite integrand sample at x = " + std::to_string(x2));
        sum += kGlWeights[i] * (g1 + g2);
    }
    return h * sum;
}

double adaptive_gl(const std::function<double(double)>& g, double a, double b,
                   double tol, double whole, int depth) {
    const double m = 0.5 * (a + b);
    const double left = gl12(g, a, m);
    const double right = gl12(g, m, b);
    const double err = std::abs(left + right - whole);
    if (err <= tol)
        return left + right;
    if (depth <= 0)
        throw NumericsError("quadrature tolerance not reached at max refinement");
    return adaptive_gl(g, a, m, 0.5 * tol, left, depth - 1) +
           adaptive_gl(g, m, b, 0.5 * tol, right, depth - 1);
}
} // namespace

Grid::Grid(std::vector<double> pts, double lo_, double hi_)
    : points(std::move(pts)), lo(lo_), hi(hi_) {
    if (points.empty())
        throw std::invalid_argument("Grid: empty point list");
    double prev = lo;
    for (double x : points) {
        if (!(x > prev))
            throw std::invalid_argument("Grid: points must be strictly increasing inside (lo, hi)");
        prev = x;
    }
    if (!(points.back() < hi))
        throw std::invalid_argument("Grid: points must lie strictly below hi");
}

Grid Grid::uniform_interior(double lo, double hi, int n, double eps) {
    if (n < 1)
        throw std::invalid_argument("Grid: need at least one point");
    std::vector<double> pts(static_cast<std::size_t>(n));
    const double a = lo + eps;
    const double b = hi - eps;
    if (n == 1) {
        pts[0] = 0.5 * (a + b);
    } else {
        const double step = (b - a) / (n - 1);
        for (int i = 0; i < n; ++i)
            pts[static_cast<std::size_t>(i)] = a + step * i;
    }
    return Grid(std::move(pts), lo, hi);
}

Bracket::Bracket(double lo_, double hi_, double f_lo_, double f_hi_)
    : lo(lo_), hi(hi_), f_lo(f_lo_), f_hi(f_hi_) {
    if (!(lo < hi))
        throw std::invalid_argument("Bracket: lo must be below hi");
    if (!(f_lo * f_hi < 0.0))
        throw std::invalid_argument("Bracket: no sign change on [lo, hi]");
}

Bracket Bracket::from(const std::function<double(double)>& f, double lo, double hi) {
    return Bracket(lo, hi, f(lo), f(hi));
}

double integrate(const std::function<double(double)>& g, double a, double b, double tol) {
    if (a == b)
        return 0.0;
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate: tol must be positive");
    const double whole = gl12(g, a, b);
    return adaptive_gl(g, a, b, tol, whole, 48);
}

double integrate_weighted(const std::function<double(double)>& f, double tol) {
    // q = sin^2(theta/2) absorbs the 1/sqrt(q(1-q)) weight exactly:
    // the integrand on (0, pi) is just f(q(theta)).
    auto g = [&f](double theta) {
        double s = std::sin(0.5 * theta);
        return f(s * s);
    };
    return integrate(g, 0.0, kPi, tol);
}

double find_root(const std::function<double(double)>& f, Bracket bracket, double tol) {
    // Brent: inverse quadratic / secant accelerants with a bisection
    // fallback that never leaves the bracket.
    double a = bracket.lo, b = bracket.hi;
    double fa = bracket.f_lo, fb = bracket.f_hi;
    if (std::abs(fa) < std::abs(fb)) {
        std::swap(a, b);
        std::swap(fa, fb);
    }
    double c = a, fc = fa;
    double d = b - a;
    bool mflag = true;

    while (fb != 0.0 && std::abs(b - a) > tol) {
        double s;
        if (fa != fc && fb != fc) {
            s = a * fb * fc / ((fa - fb) * (fa - fc)) +
                b * fa * fc / ((fb - fa) * (fb - fc)) +
                c * fa * fb / ((fc - fa) * (fc - fb));
        } else {
            s = b - fb * (b - a) / (fb - fa);
        }

        const double lo = std::min(0.25 * (3.0 * a + b), b);
        const double hi = std::max(0.25 * (3.0 * a + b), b);
        if (s <= lo || s >= hi ||
            (mflag && std::abs(s - b) >= 0.5 * std::abs(b - c)) ||
            (!mflag && std::abs(s - b) >= 0.5 * std::abs(d)) ||
            (mflag && std::abs(b - c) < tol) ||
            (!mflag && std::abs(d) < tol)) {
            s = 0.5 * (a + b);
            mflag = true;
        } else {
            mflag = false;
        }

        const double fs = f(s);
        d = c - b;
        c = b;
        fc = fb;
        if (fa * fs < 0.0) {
            b = s;
            fb = fs;
        } else {
            a = s;
            fa = fs;
        }
        if (std::abs(fa) < std::abs(fb)) {
            std::swap(a, b);
            std::swap(fa, fb);
        }
    }
    return b;
}

double finite_diff_second(const std::function<double(double)>& f, double x, double h) {
    if (!(h > 0.0))
        throw std::invalid_argument("finite_diff_second: h must be positive");
    return (f(x - h) - 2.0 * f(x) + f(x + h)) / (h * h);
}

IvpResult solve_ivp(const OdeRhs& rhs, std::vector<double> y0,
                    double t0, double t1, const IvpOptions& options) {
    if (!(options.tol > 0.0))
        throw std::invalid_argument("solve_ivp: tol must be positive");

    // Dormand-Prince 5(4) coefficients.
    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5,
                            c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695,
                            e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                            e6 = 22.0 / 525, e7 = -1.0 / 40;

    const std::size_t dim = y0.size();
    const double span = t1 - t0;
    const double dir = (span >= 0.0) ? 1.0 : -1.0;

    IvpResult result;
    result.y = std::move(y0);
    if (options.record)
        result.samples.push_back({t0, result.y});
    if (span == 0.0)
        return result;

    std::vector<double> k1(dim), k2(dim), k3(dim), k4(dim), k5(dim), k6(dim),
        k7(dim), ytmp(dim), ynew(dim);

    double t = t0;
    double h = dir * std::min(std::abs(span) / 100.0,
                              std::pow(options.tol, 0.25));
    if (options.max_step > 0.0)
        h = dir * std::min(std::abs(h), options.max_step);
    const double h_min = std::abs(span) * 1e-15;

    rhs(t, result.y, k1);
    bool k1_fresh = true;

    while (dir * (t1 - t) > 0.0) {
        if (std::abs(h) > dir * (t1 - t))
            h = t1 - t;
        if (std::abs(h) < h_min)
            throw NumericsError("solve_ivp: step size underflow (stiffness) at t = " +
                                std::to_string(t));

        if (!k1_fresh)
            rhs(t, result.y, k1);

        const std::vector<double>& y = result.y;
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + c2 * h, ytmp, k2);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, ytmp, k3);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, ytmp, k4);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + c5 * h, ytmp, k5);
        for (std::size_t i = 0; i < dim; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                  a64 * k4[i] + a65 * k5[i]);
        rhs(t + h, ytmp, k6);
        for (std::size_t i = 0; i < dim; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                  b5 * k5[i] + b6 * k6[i]);
        rhs(t + h, ynew, k7);

        // Scaled error norm against atol = rtol = tol.
        double err = 0.0;
        for (std::size_t i = 0; i < dim; ++i) {
            const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                  e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale =
                options.tol * (1.0 + std::max(std::abs(y[i]), std::abs(ynew[i])));
            const double r = e / scale;
            err += r * r;
        }
        err = std::sqrt(err / static_cast<double>(dim));

        if (err <= 1.0) {
            t += h;
            result.y = ynew;
            for (double v : result.y)
                if (!std::isfinite(v))
                    throw NumericsError("solve_ivp: state diverged at t = " + std::to_string(t));
            k1 = k7; // FSAL
            k1_fresh = true;
            ++result.steps;
            if (options.record)
                result.samples.push_back({t, result.y});
        }
        // On rejection t is unchanged, so k1 stays valid.

        double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        factor = std::clamp(factor, 0.2, 5.0);
        h *= factor;
        if (options.max_step > 0.0 && std::abs(h) > options.max_step)
            h = dir * options.max_step;
    }
    return result;
}

} // namespace bspace
