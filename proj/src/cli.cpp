#include "bspace/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "bspace/classical.hpp"
#include "bspace/kernels.hpp"
#include "bspace/manifold.hpp"

namespace bspace::cli {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kGridEps = 1e-9;

bool verbose() {
    const char* v = std::getenv("BDYN_LOG");
    return v != nullptr && *v != '\0';
}

void log(const std::string& msg) {
    if (verbose())
        std::cerr << "[bdyn] " << msg << "\n";
}

std::string short_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string sibling_path(const std::string& path, const std::string& tag) {
    const auto dot = path.find_last_of('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
        return path + "." + tag;
    return path.substr(0, dot) + "." + tag + path.substr(dot);
}
} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_table(const ColumnTable& table, const OutputSpec& out) {
    std::ofstream f(out.path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open output file: " + out.path);
    if (out.format == "json") {
        nlohmann::ordered_json j;
        for (std::size_t c = 0; c < table.names.size(); ++c)
            j[table.names[c]] = table.columns[c];
        f << j.dump(2) << "\n";
    } else if (out.format == "csv") {
        for (std::size_t c = 0; c < table.names.size(); ++c)
            f << (c ? "," : "") << table.names[c];
        f << "\n";
        const std::size_t rows = table.columns.empty() ? 0 : table.columns[0].size();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < table.columns.size(); ++c)
                f << (c ? "," : "") << format_double(table.columns[c][r]);
            f << "\n";
        }
    } else {
        throw std::invalid_argument("unknown output format: " + out.format);
    }
    if (!f.good())
        throw std::runtime_error("write failed: " + out.path);
    log("wrote " + out.path);
}

int run_eigenfunctions(const std::vector<int>& ns, int resolution,
                       const OutputSpec& out) {
    const Grid grid = Grid::uniform_interior(0.0, 1.0, resolution, kGridEps);
    const kernels::Table t = kernels::eigenfunction_table(ns, grid);
    ColumnTable table;
    table.names.push_back("q");
    table.columns.push_back(grid.points);
    for (std::size_t j = 0; j < ns.size(); ++j) {
        table.names.push_back("psi_" + std::to_string(ns[j]));
        std::vector<double> col(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            col[i] = t.at(i, j);
        table.columns.push_back(std::move(col));
    }
    write_table(table, out);
    return 0;
}

int run_greens(const std::vector<double>& qprimes, int resolution,
               const OutputSpec& out) {
    for (double qp : qprimes)
        manifold::check_interior(qp, "qprime");
    const Grid grid = Grid::uniform_interior(0.0, 1.0, resolution, kGridEps);
    const kernels::Table t = kernels::greens_table(grid, qprimes);
    ColumnTable table;
    table.names.push_back("q");
    table.columns.push_back(grid.points);
    for (std::size_t j = 0; j < qprimes.size(); ++j) {
        table.names.push_back("G_" + short_num(qprimes[j]));
        std::vector<double> col(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            col[i] = t.at(i, j);
        table.columns.push_back(std::move(col));
    }
    write_table(table, out);
    return 0;
}

int run_evolve(const std::string& kind, const spectral::SpectralExpansion& initial,
               const std::vector<double>& times, spectral::HeatDecayLaw law,
               int resolution, const OutputSpec& out) {
    const Grid grid = Grid::uniform_interior(0.0, 1.0, resolution, kGridEps);
    ColumnTable table;
    table.names.push_back("q");
    table.columns.push_back(grid.points);
    for (double t : times) {
        std::vector<double> col(grid.size());
        if (kind == "heat") {
            const auto e = spectral::heat_evolve(initial, t, law);
            for (std::size_t i = 0; i < grid.size(); ++i)
                col[i] = spectral::evaluate(e, grid.points[i]);
        } else if (kind == "wave") {
            const auto e = spectral::wave_evolve(initial, t);
            // Real part of the complex wave solution.
            for (std::size_t i = 0; i < grid.size(); ++i)
                col[i] = spectral::evaluate(e, grid.points[i]).real();
        } else {
            throw std::invalid_argument("evolve kind must be heat or wave");
        }
        table.names.push_back("t=" + short_num(t));
        table.columns.push_back(std::move(col));
    }
    write_table(table, out);
    return 0;
}

int run_free_particle(const quantum::PhysicalParams& p, int n_max,
                      const OutputSpec& out) {
    ColumnTable table;
    table.names = {"n", "E"};
    table.columns.resize(2);
    for (int n = 1; n <= n_max; ++n) {
        table.columns[0].push_back(n);
        table.columns[1].push_back(quantum::free_particle_energy(p, n));
    }
    write_table(table, out);
    return 0;
}

int run_oscillator(const quantum::PhysicalParams& p, int n_max, int resolution,
                   const OutputSpec& out) {
    log("root-finding " + std::to_string(n_max) + " oscillator levels");
    const quantum::EnergySpectrum spec = quantum::oscillator_levels(p, n_max);

    ColumnTable table;
    table.names = {"n", "E_exact", "E_approx", "E_asymptotic"};
    table.columns.resize(4);
    for (const auto& lv : spec.levels) {
        table.columns[0].push_back(lv.n);
        table.columns[1].push_back(lv.E_exact);
        table.columns[2].push_back(lv.E_approx);
        table.columns[3].push_back(p.hbar * p.hbar * lv.n * lv.n / (2.0 * p.m));
    }
    write_table(table, out);

    // Energy sweep of S(pi; E) against the cosine approximation.
    const double E_lo = p.k / 16.0 + 1e-12;
    const double E_hi = 1.1 * spec.levels.back().E_exact;
    ColumnTable cond;
    cond.names = {"E", "S_pi", "S_pi_approx"};
    cond.columns.resize(3);
    for (int i = 0; i < resolution; ++i) {
        const double E = E_lo + (E_hi - E_lo) * i / (resolution - 1);
        cond.columns[0].push_back(E);
        cond.columns[1].push_back(quantum::oscillator_energy_condition(p, E));
        cond.columns[2].push_back(quantum::approx_condition(p, E));
    }
    OutputSpec cond_out{sibling_path(out.path, "condition"), out.format};
    write_table(cond, cond_out);
    return 0;
}

int run_shoot(const quantum::PhysicalParams& p, const std::string& potential,
              int n_max, const OutputSpec& out) {
    std::function<double(double)> V;
    if (potential == "zero") {
        V = [](double) { return 0.0; };
    } else if (potential == "cos2") {
        V = [p](double th) {
            const double c = std::cos(th);
            return p.k / 8.0 * c * c;
        };
    } else if (potential == "kl-quadratic") {
        // (k/2)(sin^2(theta/2) - q')^2: the quadratic potential for
        // arbitrary anchor, without the q' = 1/2 Mathieu reduction.
        V = [p](double th) {
            const double s = std::sin(0.5 * th);
            const double d = s * s - p.qprime;
            return 0.5 * p.k * d * d;
        };
    } else if (potential == "geodesic") {
        V = [p](double th) {
            const double d = th - manifold::to_theta(p.qprime);
            return 0.5 * p.k * 0.5 * d * d;
        };
    } else {
        throw std::invalid_argument("unknown potential: " + potential);
    }
    const quantum::EnergySpectrum spec = quantum::shooting_solve(p, V, n_max);
    ColumnTable table;
    table.names = {"n", "E"};
    table.columns.resize(2);
    for (const auto& lv : spec.levels) {
        table.columns[0].push_back(lv.n);
        table.columns[1].push_back(lv.E_exact);
    }
    write_table(table, out);
    return 0;
}

namespace {
classical::PotentialTag parse_tag(const std::string& tag) {
    if (tag == "free") return classical::PotentialTag::Free;
    if (tag == "kl") return classical::PotentialTag::Kl;
    if (tag == "kl-quadratic") return classical::PotentialTag::KlQuadratic;
    if (tag == "geodesic") return classical::PotentialTag::Geodesic;
    throw std::invalid_argument("unknown potential tag: " + tag);
}

ColumnTable trajectory_table(const classical::Trajectory& traj,
                             const quantum::PhysicalParams& p,
                             classical::PotentialTag tag) {
    ColumnTable table;
    table.names = {"t", "q", "p", "H"};
    table.columns.resize(4);
    for (const auto& s : traj.samples) {
        table.columns[0].push_back(s.t);
        table.columns[1].push_back(s.q);
        table.columns[2].push_back(s.p);
        table.columns[3].push_back(classical::hamiltonian(s, p, tag));
    }
    return table;
}
} // namespace

int run_trajectory(const quantum::PhysicalParams& p, const std::string& tag,
                   double q0, double p0, double t_end, double tol,
                   const OutputSpec& out) {
    const classical::PotentialTag pt = parse_tag(tag);
    const classical::PhaseState s0{q0, p0, 0.0};
    try {
        const classical::Trajectory traj =
            classical::integrate_trajectory(s0, p, pt, t_end, tol);
        const ColumnTable table = trajectory_table(traj, p, pt);
        // Conservation check before declaring success.
        const double h0 = table.columns[3].front();
        const double h1 = table.columns[3].back();
        write_table(table, out);
        if (std::abs(h1 - h0) > 1e-8 * std::max(std::abs(h0), 1e-30)) {
            std::cerr << "trajectory: energy drift exceeds 1e-8\n";
            return 1;
        }
        return 0;
    } catch (const classical::BoundaryEscape& e) {
        // Partial output, nonzero exit.
        write_table(trajectory_table(e.partial_trajectory, p, pt), out);
        std::cerr << "trajectory: " << e.what() << " at t = " << e.last_state.t
                  << ", q = " << e.last_state.q << "\n";
        return 2;
    }
}

spectral::SpectralExpansion parse_modes(const std::string& spec) {
    spectral::SpectralExpansion e;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("mode spec must be n:A[,n:A...], got " + spec);
        const int n = std::stoi(item.substr(0, colon));
        const double a = std::stod(item.substr(colon + 1));
        e.modes.push_back({n, a});
    }
    if (e.modes.empty())
        throw std::invalid_argument("empty mode spec");
    std::sort(e.modes.begin(), e.modes.end(),
              [](const auto& a, const auto& b) { return a.n < b.n; });
    for (std::size_t i = 0; i + 1 < e.modes.size(); ++i)
        if (e.modes[i].n == e.modes[i + 1].n)
            throw std::invalid_argument("duplicate mode index in spec");
    if (e.modes.front().n < 1)
        throw std::invalid_argument("mode indices must be >= 1");
    return e;
}

spectral::SpectralExpansion expand_samples_csv(const std::string& path, int n_max) {
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open samples file: " + path);
    std::vector<double> qs, us;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            continue;
        char* end = nullptr;
        const double q = std::strtod(line.c_str(), &end);
        if (end == line.c_str())
            continue; // header
        const double u = std::stod(line.substr(comma + 1));
        qs.push_back(q);
        us.push_back(u);
    }
    if (qs.size() < 2)
        throw std::runtime_error("samples file needs at least two (q,u) rows");
    auto interp = [qs, us](double q) {
        if (q <= qs.front())
            return us.front();
        if (q >= qs.back())
            return us.back();
        const auto it = std::upper_bound(qs.begin(), qs.end(), q);
        const std::size_t j = static_cast<std::size_t>(it - qs.begin());
        const double u = (q - qs[j - 1]) / (qs[j] - qs[j - 1]);
        return (1.0 - u) * us[j - 1] + u * us[j];
    };
    return spectral::expand(interp, n_max, 1e-10);
}

} // namespace bspace::cli
