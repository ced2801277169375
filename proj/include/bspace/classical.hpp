#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bspace/quantum.hpp" // PhysicalParams

// Classical Hamiltonian dynamics in Bernoulli space:
// H = (1/2m) q(1-q) p^2 + (k/2) V(q', q) for the tagged potential.

namespace bspace::classical {

using quantum::PhysicalParams;

enum class PotentialTag { Free, Kl, KlQuadratic, Geodesic };

struct PhaseState {
    double q;
    double p;
    double t = 0.0;
};

struct Trajectory {
    std::vector<PhaseState> samples;
    PotentialTag potential = PotentialTag::Free;
    PhysicalParams params;
};

// Thrown when a trajectory reaches the boundary guard; carries the last
// valid state and whatever was integrated so far.
class BoundaryEscape : public std::runtime_error {
public:
    BoundaryEscape(const std::string& msg, PhaseState last, Trajectory partial = {})
        : std::runtime_error(msg), last_state(last), partial_trajectory(std::move(partial)) {}
    PhaseState last_state;
    Trajectory partial_trajectory;
};

// Potential energy (k/2) * tagged square distance from the anchor q'.
double potential(double q, const PhysicalParams& p, PotentialTag tag);

// dV/dq, analytic for each tag.
double potential_derivative(double q, const PhysicalParams& p, PotentialTag tag);

double hamiltonian(const PhaseState& s, const PhysicalParams& p, PotentialTag tag);

Trajectory integrate_trajectory(const PhaseState& s0, const PhysicalParams& p,
                                PotentialTag tag, double t_end, double tol = 1e-12);

} // namespace bspace::classical
