// Timing comparison between the OpenMP kernels and their serial references,
// with an agreement check on every output.

#include <chrono>
#include <cstdio>

#include "bspace/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace bspace;

namespace {
template <class F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}
} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel kernels run serially\n");
#endif

    const Grid grid = Grid::uniform_interior(0.0, 1.0, 4000);
    std::vector<int> ns;
    for (int n = 1; n <= 32; ++n)
        ns.push_back(n);

    kernels::Table a, b;
    double ts = time_ms([&] { a = kernels::eigenfunction_table_serial(ns, grid); });
    double tp = time_ms([&] { b = kernels::eigenfunction_table(ns, grid); });
    std::printf("eigenfunction_table  serial %8.2f ms  parallel %8.2f ms  maxdiff %.3e\n",
                ts, tp, kernels::max_abs_diff(a, b));

    ts = time_ms([&] { a = kernels::gram_matrix_serial(24); });
    tp = time_ms([&] { b = kernels::gram_matrix(24); });
    std::printf("gram_matrix          serial %8.2f ms  parallel %8.2f ms  maxdiff %.3e\n",
                ts, tp, kernels::max_abs_diff(a, b));

    const Grid qs = Grid::uniform_interior(0.0, 1.0, 60);
    std::vector<double> qps;
    for (int i = 1; i <= 40; ++i)
        qps.push_back(i / 41.0);
    ts = time_ms([&] { a = kernels::greens_series_table_serial(qs, qps, 10000); });
    tp = time_ms([&] { b = kernels::greens_series_table(qs, qps, 10000); });
    std::printf("greens_series_table  serial %8.2f ms  parallel %8.2f ms  maxdiff %.3e\n",
                ts, tp, kernels::max_abs_diff(a, b));

    ts = time_ms([&] { a = kernels::greens_table_serial(qs, qps); });
    tp = time_ms([&] { b = kernels::greens_table(qs, qps); });
    std::printf("greens_table         serial %8.2f ms  parallel %8.2f ms  maxdiff %.3e\n",
                ts, tp, kernels::max_abs_diff(a, b));
    return 0;
}
