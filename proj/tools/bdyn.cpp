// bdyn: classical and quantum dynamics on the Bernoulli information
// manifold. Subcommands emit flat CSV/JSON data files.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bspace/cli.hpp"
#include "bspace/spectral.hpp"

using namespace bspace;

int main(int argc, char** argv) {
    CLI::App app{"Dynamics on the Bernoulli information manifold"};
    app.require_subcommand(1);

    quantum::PhysicalParams params; // defaults m=8, k=8, hbar=1, qprime=1/2
    int resolution = 200;
    int nmax = 10;
    std::string format = "csv";
    std::string out = "out.csv";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--m", params.m, "mass (nerts)");
        cmd->add_option("--k", params.k, "spring constant (nerts/s^2)");
        cmd->add_option("--hbar", params.hbar, "action scale");
        cmd->add_option("--qprime", params.qprime, "anchor point in (0,1)");
        cmd->add_option("--resolution", resolution, "grid resolution")
            ->check(CLI::Range(2, 10000000));
        cmd->add_option("--nmax", nmax, "mode / level truncation")
            ->check(CLI::Range(1, 100000));
        cmd->add_option("--format", format, "output format: csv | json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", out, "output path");
    };

    // eigenfunctions
    std::string n_list = "1,2,3,4";
    auto* eig = app.add_subcommand("eigenfunctions",
                                   "Tabulate Laplace-Beltrami eigenfunctions");
    add_common(eig);
    eig->add_option("--n-list", n_list, "comma-separated mode indices");

    // greens
    std::string qprime_list = "0.3333333333333333,0.5,0.6666666666666666";
    auto* grn = app.add_subcommand("greens", "Tabulate the closed-form Green's function");
    add_common(grn);
    grn->add_option("--qprime-list", qprime_list, "comma-separated source points");

    // evolve
    std::string kind = "heat";
    std::string modes = "1:1";
    std::string samples_csv;
    std::string t_list = "0,0.5,1";
    std::string decay_law = "consistent";
    auto* evo = app.add_subcommand("evolve", "Heat or wave evolution of an expansion");
    add_common(evo);
    evo->add_option("--kind", kind, "heat | wave")->check(CLI::IsMember({"heat", "wave"}));
    evo->add_option("--modes", modes, "initial expansion as n:A[,n:A...]");
    evo->add_option("--initial-samples", samples_csv,
                    "CSV of (q,u) samples to expand instead of --modes");
    evo->add_option("--t-list", t_list, "comma-separated times");
    evo->add_option("--decay-law", decay_law, "heat decay law: consistent | paper")
        ->check(CLI::IsMember({"consistent", "paper"}));

    // free-particle
    auto* fp = app.add_subcommand("free-particle", "Free-particle energy levels");
    add_common(fp);

    // oscillator
    auto* osc = app.add_subcommand(
        "oscillator", "Quadratic-KL oscillator levels via the Mathieu pipeline");
    add_common(osc);

    // shoot
    std::string potential = "cos2";
    auto* sh = app.add_subcommand("shoot", "Generic Dirichlet shooting eigen-solver");
    add_common(sh);
    sh->add_option("--potential", potential,
                   "zero | cos2 | kl-quadratic | geodesic")
        ->check(CLI::IsMember({"zero", "cos2", "kl-quadratic", "geodesic"}));

    // trajectory
    std::string tag = "kl-quadratic";
    double q0 = 0.6, p0 = 0.0, t_end = 10.0, tol = 1e-12;
    auto* tr = app.add_subcommand("trajectory", "Classical Hamiltonian trajectory");
    add_common(tr);
    tr->add_option("--potential", tag, "free | kl | kl-quadratic | geodesic")
        ->check(CLI::IsMember({"free", "kl", "kl-quadratic", "geodesic"}));
    tr->add_option("--q0", q0, "initial q");
    tr->add_option("--p0", p0, "initial momentum");
    tr->add_option("--t-end", t_end, "integration time (s)");
    tr->add_option("--tol", tol, "integrator tolerance");

    CLI11_PARSE(app, argc, argv);

    auto parse_ints = [](const std::string& s) {
        std::vector<int> v;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(std::stoi(item));
        return v;
    };
    auto parse_doubles = [](const std::string& s) {
        std::vector<double> v;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            v.push_back(std::stod(item));
        return v;
    };

    cli::OutputSpec spec{out, format};
    try {
        if (*eig)
            return cli::run_eigenfunctions(parse_ints(n_list), resolution, spec);
        if (*grn)
            return cli::run_greens(parse_doubles(qprime_list), resolution, spec);
        if (*evo) {
            const auto initial = samples_csv.empty()
                                     ? cli::parse_modes(modes)
                                     : cli::expand_samples_csv(samples_csv, nmax);
            const auto law = (decay_law == "paper") ? spectral::HeatDecayLaw::Paper
                                                    : spectral::HeatDecayLaw::Consistent;
            return cli::run_evolve(kind, initial, parse_doubles(t_list), law,
                                   resolution, spec);
        }
        if (*fp)
            return cli::run_free_particle(params, nmax, spec);
        if (*osc)
            return cli::run_oscillator(params, nmax, resolution, spec);
        if (*sh)
            return cli::run_shoot(params, potential, nmax, spec);
        if (*tr)
            return cli::run_trajectory(params, tag, q0, p0, t_end, tol, spec);
    } catch (const std::exception& e) {
        std::cerr << "bdyn: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
