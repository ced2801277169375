#pragma once

#include <string>
#include <vector>

#include "bspace/quantum.hpp"
#include "bspace/spectral.hpp"

// Command implementations behind the bdyn CLI. Each run_* computes one
// pipeline and writes a flat table (CSV or JSON) to the requested path.
// Returns a process exit code; 0 means everything was written and all
// internal checks passed.

namespace bspace::cli {

struct OutputSpec {
    std::string path;
    std::string format = "csv"; // "csv" | "json"
};

// Column-oriented output table.
struct ColumnTable {
    std::vector<std::string> names;
    std::vector<std::vector<double>> columns;
};

// Fixed 17-significant-digit formatting; identical flags give
// byte-identical files.
std::string format_double(double v);

void write_table(const ColumnTable& table, const OutputSpec& out);

int run_eigenfunctions(const std::vector<int>& ns, int resolution,
                       const OutputSpec& out);

int run_greens(const std::vector<double>& qprimes, int resolution,
               const OutputSpec& out);

int run_evolve(const std::string& kind, const spectral::SpectralExpansion& initial,
               const std::vector<double>& times, spectral::HeatDecayLaw law,
               int resolution, const OutputSpec& out);

int run_free_particle(const quantum::PhysicalParams& p, int n_max,
                      const OutputSpec& out);

// Writes the level table to out.path and an energy sweep of the exact
// boundary condition with its cosine approximation to a sibling
// "<stem>.condition.<ext>" file.
int run_oscillator(const quantum::PhysicalParams& p, int n_max, int resolution,
                   const OutputSpec& out);

// potential: "zero" | "cos2" | "kl-quadratic" | "geodesic"
int run_shoot(const quantum::PhysicalParams& p, const std::string& potential,
              int n_max, const OutputSpec& out);

int run_trajectory(const quantum::PhysicalParams& p, const std::string& tag,
                   double q0, double p0, double t_end, double tol,
                   const OutputSpec& out);

// Parse "n:A,n:A" into an expansion.
spectral::SpectralExpansion parse_modes(const std::string& spec);

// Build an expansion from (q, u) samples in a two-column CSV by linear
// interpolation and weighted projection.
spectral::SpectralExpansion expand_samples_csv(const std::string& path, int n_max);

} // namespace bspace::cli
