#pragma once

#include <functional>
#include <string>
#include <vector>

// Quantized dynamics on the Bernoulli manifold: the free particle, the
// quadratic-KL oscillator via a Mathieu-equation shooting pipeline, and a
// generic Dirichlet eigenvalue solver on (0, pi).

namespace bspace::quantum {

struct PhysicalParams {
    double m = 8.0;       // mass, nerts
    double k = 8.0;       // spring constant, nerts/s^2
    double hbar = 1.0;    // action scale, nats*nerts/s
    double qprime = 0.5;  // anchor point in (0,1)

    void validate() const;
};

// Canonical Mathieu equation y'' + (a - 2 q_M cos 2 theta) y = 0.
struct MathieuParams {
    double a;
    double q_M;
};

struct EnergyLevel {
    int n;               // 1-based; level n has n-1 interior nodes
    double E_exact;
    double E_approx;     // closed-form approximation paired with the level
    std::string method;  // "root-found" or "formula"
};

struct EnergySpectrum {
    std::vector<EnergyLevel> levels;
};

// Free-particle level E_n = hbar^2 n^2 / (2m).
double free_particle_energy(const PhysicalParams& p, int n);

// The free-particle eigenfunction; identical to spectral::psi(n, .).
std::function<double(double)> free_particle_wavefunction(int n);

// Map (params, E) to the canonical Mathieu pair:
// a = (16 m E - k m) / (8 hbar^2), q_M = k m / (16 hbar^2).
MathieuParams mathieu_params(const PhysicalParams& p, double E);

// Mathieu functions of the first kind, fixed by initial conditions
// S(0)=0, S'(0)=1 and C(0)=1, C'(0)=0, integrated from theta = 0.
double mathieu_S(const MathieuParams& mp, double theta, double tol = 1e-10);
double mathieu_C(const MathieuParams& mp, double theta, double tol = 1e-10);

// S(pi; E) for the oscillator: zeros in E are the energy levels.
double oscillator_energy_condition(const PhysicalParams& p, double E);

// Printed approximation E_n ~ (k m + 8 n^2 hbar^2 + 16 n hbar^2 + 8 hbar^2)/(16 m).
double oscillator_levels_approx(const PhysicalParams& p, int n);

// cos(pi/4 (sqrt((32 E m - 2 k m)/hbar^2) - 2)); zeros reproduce the
// approximate levels. Throws std::domain_error on a negative radicand.
double approx_condition(const PhysicalParams& p, double E);

// Root-found exact levels for n = 1..n_max, each verified by interior node
// count so no level is skipped; paired with the approximate formula.
EnergySpectrum oscillator_levels(const PhysicalParams& p, int n_max);

// Normalized oscillator eigenfunction on (0,1); <psi_n, psi_n>_w = 1.
std::function<double(double)> oscillator_wavefunction(const PhysicalParams& p, int n);

// Coefficient mismatches between the Bernoulli Mathieu equation (with
// k = 64 m g l^3) and the pendulum Mathieu equation after eta = 2 theta.
// Both vanish identically in E iff l = 1/2.
std::pair<double, double> pendulum_map_residuals(double m, double g, double l,
                                                 double E, double hbar = 1.0);

// Generic Dirichlet eigenvalue solver for
// -(hbar^2 / 2m) psi'' + V(theta) psi = E psi on (0, pi) by shooting.
EnergySpectrum shooting_solve(const PhysicalParams& p,
                              const std::function<double(double)>& V, int n_max);

// Normalized shooting eigenfunction on (0,1) at energy E (sign fixed by a
// positive slope at theta = 0).
std::function<double(double)> shooting_wavefunction(const PhysicalParams& p,
                                                    const std::function<double(double)>& V,
                                                    double E);

// Interior nodes of the shooting solution at energy E (level n has n-1).
int count_nodes(const PhysicalParams& p, const std::function<double(double)>& V,
                double E);

} // namespace bspace::quantum
