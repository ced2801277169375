#pragma once

#include <vector>

#include "bspace/numerics.hpp"

// Grid-evaluation kernels used by the CLI and the acceptance checks.
// Each kernel ships in two flavours: an OpenMP-parallel version (the
// default entry point) and a serial reference kept for testing and for
// the bench_kernels comparison target.

namespace bspace::kernels {

// Row-major matrix values[i][j].
struct Table {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Psi_n(q) over the grid, one column per requested mode.
Table eigenfunction_table(const std::vector<int>& ns, const Grid& grid);
Table eigenfunction_table_serial(const std::vector<int>& ns, const Grid& grid);

// Gram matrix <Psi_n, Psi_m>_w for n, m = 1..n_max.
Table gram_matrix(int n_max, double tol = 1e-12);
Table gram_matrix_serial(int n_max, double tol = 1e-12);

// Closed-form Green's function G(q_i, qprime_j).
Table greens_table(const Grid& qs, const std::vector<double>& qprimes);
Table greens_table_serial(const Grid& qs, const std::vector<double>& qprimes);

// Series partial sums G_N(q_i, qprime_j), one fixed N for all entries.
Table greens_series_table(const Grid& qs, const std::vector<double>& qprimes, int n_terms);
Table greens_series_table_serial(const Grid& qs, const std::vector<double>& qprimes, int n_terms);

double max_abs_diff(const Table& a, const Table& b);

} // namespace bspace::kernels
