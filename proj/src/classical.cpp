#include "bspace/classical.hpp"

#include <cmath>

#include "bspace/manifold.hpp"
#include "bspace/numerics.hpp"

namespace bspace::classical {

namespace {
constexpr double kBoundaryGuard = 1e-12;
} // namespace

double potential(double q, const PhysicalParams& p, PotentialTag tag) {
    switch (tag) {
        case PotentialTag::Free:
            return 0.0;
        case PotentialTag::Kl:
            // Argument order fixed as D_KL(q', q) throughout.
            return 0.5 * p.k * manifold::kl_divergence(p.qprime, q);
        case PotentialTag::KlQuadratic:
            return 0.5 * p.k * manifold::kl_quadratic(p.qprime, q);
        case PotentialTag::Geodesic:
            return 0.5 * p.k * manifold::geodesic_sqdist(q, p.qprime);
    }
    throw std::logic_error("potential: unknown tag");
}

double potential_derivative(double q, const PhysicalParams& p, PotentialTag tag) {
    switch (tag) {
        case PotentialTag::Free:
            return 0.0;
        case PotentialTag::Kl:
            // d/dq D_KL(q', q) = -q'/q + (1-q')/(1-q)
            return 0.5 * p.k * (-p.qprime / q + (1.0 - p.qprime) / (1.0 - q));
        case PotentialTag::KlQuadratic:
            return 0.5 * p.k * 2.0 * (q - p.qprime);
        case PotentialTag::Geodesic:
            // d/dq [ (theta - theta')^2 / 2 ] = (theta - theta') / sqrt(q(1-q))
            return 0.5 * p.k *
                   (manifold::to_theta(q) - manifold::to_theta(p.qprime)) /
                   std::sqrt(q * (1.0 - q));
    }
    throw std::logic_error("potential_derivative: unknown tag");
}

double hamiltonian(const PhaseState& s, const PhysicalParams& p, PotentialTag tag) {
    manifold::check_interior(s.q);
    return s.q * (1.0 - s.q) * s.p * s.p / (2.0 * p.m) + potential(s.q, p, tag);
}

Trajectory integrate_trajectory(const PhaseState& s0, const PhysicalParams& p,
                                PotentialTag tag, double t_end, double tol) {
    p.validate();
    manifold::check_interior(s0.q, "q0");
    if (!(t_end > 0.0))
        throw std::domain_error("integrate_trajectory: t_end must be positive");

    OdeRhs rhs = [&p, tag](double t, const std::vector<double>& y,
                           std::vector<double>& dy) {
        const double q = y[0];
        const double mom = y[1];
        if (q <= kBoundaryGuard || q >= 1.0 - kBoundaryGuard)
            throw BoundaryEscape("trajectory reached the boundary guard",
                                 PhaseState{q, mom, t});
        dy[0] = q * (1.0 - q) * mom / p.m;                       // dH/dp
        dy[1] = -((1.0 - 2.0 * q) * mom * mom / (2.0 * p.m) +    // -dH/dq
                  potential_derivative(q, p, tag));
    };

    IvpOptions opt;
    opt.tol = tol;
    opt.record = true;

    Trajectory traj;
    traj.potential = tag;
    traj.params = p;

    // Integrate in chunks so a boundary escape can still hand back the
    // partial trajectory.
    const int chunks = 64;
    std::vector<double> y = {s0.q, s0.p};
    double t = s0.t;
    traj.samples.push_back(s0);
    for (int c = 0; c < chunks; ++c) {
        const double t_next = s0.t + t_end * (c + 1) / chunks;
        try {
            IvpResult r = solve_ivp(rhs, y, t, t_next, opt);
            for (std::size_t i = 1; i < r.samples.size(); ++i)
                traj.samples.push_back(
                    {r.samples[i].y[0], r.samples[i].y[1], r.samples[i].t});
            y = r.y;
            t = t_next;
        } catch (const BoundaryEscape& e) {
            throw BoundaryEscape(e.what(), e.last_state, traj);
        }
    }
    return traj;
}

} // namespace bspace::classical
