#include "bspace/kernels.hpp"

#include <cmath>

#include "bspace/spectral.hpp"

namespace bspace::kernels {

namespace {
Table make_table(std::size_t rows, std::size_t cols) {
    Table t;
    t.rows = rows;
    t.cols = cols;
    t.data.assign(rows * cols, 0.0);
    return t;
}
} // namespace

Table eigenfunction_table_serial(const std::vector<int>& ns, const Grid& grid) {
    Table t = make_table(grid.size(), ns.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = 0; j < ns.size(); ++j)
            t.at(i, j) = spectral::psi(ns[j], grid.points[i]);
    return t;
}

Table eigenfunction_table(const std::vector<int>& ns, const Grid& grid) {
    Table t = make_table(grid.size(), ns.size());
    const long rows = static_cast<long>(grid.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < ns.size(); ++j)
            t.at(static_cast<std::size_t>(i), j) =
                spectral::psi(ns[j], grid.points[static_cast<std::size_t>(i)]);
    return t;
}

Table gram_matrix_serial(int n_max, double tol) {
    const std::size_t n = static_cast<std::size_t>(n_max);
    Table t = make_table(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const int a = static_cast<int>(i) + 1;
            const int b = static_cast<int>(j) + 1;
            const double v = integrate_weighted(
                [a, b](double q) { return spectral::psi(a, q) * spectral::psi(b, q); },
                tol);
            t.at(i, j) = v;
            t.at(j, i) = v;
        }
    return t;
}

Table gram_matrix(int n_max, double tol) {
    const std::size_t n = static_cast<std::size_t>(n_max);
    Table t = make_table(n, n);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_max; ++i)
        for (long j = i; j < n_max; ++j) {
            const int a = static_cast<int>(i) + 1;
            const int b = static_cast<int>(j) + 1;
            const double v = integrate_weighted(
                [a, b](double q) { return spectral::psi(a, q) * spectral::psi(b, q); },
                tol);
            t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
            t.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = v;
        }
    return t;
}

Table greens_table_serial(const Grid& qs, const std::vector<double>& qprimes) {
    Table t = make_table(qs.size(), qprimes.size());
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = 0; j < qprimes.size(); ++j)
            t.at(i, j) = spectral::greens_closed(qs.points[i], qprimes[j]);
    return t;
}

Table greens_table(const Grid& qs, const std::vector<double>& qprimes) {
    Table t = make_table(qs.size(), qprimes.size());
    const long rows = static_cast<long>(qs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < qprimes.size(); ++j)
            t.at(static_cast<std::size_t>(i), j) =
                spectral::greens_closed(qs.points[static_cast<std::size_t>(i)], qprimes[j]);
    return t;
}

Table greens_series_table_serial(const Grid& qs, const std::vector<double>& qprimes,
                                 int n_terms) {
    Table t = make_table(qs.size(), qprimes.size());
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = 0; j < qprimes.size(); ++j)
            t.at(i, j) = spectral::greens_series(qs.points[i], qprimes[j], n_terms);
    return t;
}

Table greens_series_table(const Grid& qs, const std::vector<double>& qprimes,
                          int n_terms) {
    Table t = make_table(qs.size(), qprimes.size());
    const long rows = static_cast<long>(qs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < qprimes.size(); ++j)
            t.at(static_cast<std::size_t>(i), j) = spectral::greens_series(
                qs.points[static_cast<std::size_t>(i)], qprimes[j], n_terms);
    return t;
}

double max_abs_diff(const Table& a, const Table& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i)
        d = std::max(d, std::abs(a.data[i] - b.data[i]));
    return d;
}

} // namespace bspace::kernels
