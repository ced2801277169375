#include <doctest.h>

#include <cmath>

#include "bspace/kernels.hpp"
#include "bspace/spectral.hpp"

using namespace bspace;

TEST_CASE("parallel kernels match their serial references exactly") {
    const Grid grid = Grid::uniform_interior(0.0, 1.0, 101);
    const std::vector<int> ns = {1, 2, 5, 9};
    CHECK(kernels::max_abs_diff(kernels::eigenfunction_table(ns, grid),
                                kernels::eigenfunction_table_serial(ns, grid)) == 0.0);

    CHECK(kernels::max_abs_diff(kernels::gram_matrix(6), kernels::gram_matrix_serial(6)) ==
          0.0);

    const std::vector<double> qps = {1.0 / 3, 0.5, 2.0 / 3};
    CHECK(kernels::max_abs_diff(kernels::greens_table(grid, qps),
                                kernels::greens_table_serial(grid, qps)) == 0.0);
    const Grid small = Grid::uniform_interior(0.0, 1.0, 11);
    CHECK(kernels::max_abs_diff(kernels::greens_series_table(small, qps, 500),
                                kernels::greens_series_table_serial(small, qps, 500)) ==
          0.0);
}

TEST_CASE("gram matrix is close to identity") {
    const auto g = kernels::gram_matrix(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            CHECK(std::abs(g.at(i, j) - (i == j ? 1.0 : 0.0)) < 1e-11);
}

TEST_CASE("eigenfunction table values") {
    const Grid grid({0.25, 0.5, 0.75}, 0.0, 1.0);
    const auto t = kernels::eigenfunction_table({1, 2}, grid);
    CHECK(t.rows == 3);
    CHECK(t.cols == 2);
    CHECK(t.at(1, 0) == doctest::Approx(spectral::psi(1, 0.5)));
    CHECK(t.at(0, 1) == doctest::Approx(spectral::psi(2, 0.25)));
}
