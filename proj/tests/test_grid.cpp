#include "domlab/grid.hpp"
#include "domlab/products.hpp"
#include "domlab/solver.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace domlab;

namespace {

const GridTableRow& row_at(const std::vector<GridTableRow>& rows, std::size_t m, std::size_t n)
{
    for (const auto& r : rows)
        if (r.m == m && r.n == n)
            return r;
    throw std::out_of_range("row missing");
}

}  // namespace

TEST_CASE("grid graph numbering")
{
    const auto g = grid_graph(3, 4);
    CHECK(g == cartesian(path_graph(3), path_graph(4)).graph);
    CHECK(g.adjacent(1 * 4 + 2, 2 * 4 + 2));
    CHECK(g.adjacent(1 * 4 + 2, 1 * 4 + 3));
    CHECK_FALSE(g.adjacent(0 * 4 + 3, 1 * 4 + 0));
}

TEST_CASE("column states")
{
    const std::vector<std::uint8_t> first{0, 1, 0};
    const auto s = first_column(first);
    CHECK(s.deficits == std::vector<std::uint8_t>{1, 0, 1});
    CHECK_FALSE(s.terminal());
    for (std::size_t i = 0; i < 3; ++i)
        if (s.labels[i] > 0)
            CHECK(s.deficits[i] == 0);

    const std::vector<std::uint8_t> weak{0, 0, 1};
    CHECK_FALSE(domlab::advance(s, weak).has_value());

    const std::vector<std::uint8_t> next{1, 0, 1};
    const auto t = domlab::advance(s, next);
    REQUIRE(t.has_value());
    CHECK(t->deficits == std::vector<std::uint8_t>{0, 0, 0});
    CHECK(t->terminal());
}

TEST_CASE("reference values")
{
    CHECK(grid_value(1, 7).value == 4);
    CHECK(grid_value(2, 6).value == 6);
    CHECK(grid_value(4, 4).value == 8);
    CHECK(grid_value(3, 3).value == oracle::minimum(grid_graph(3, 3), Variant::roman2));
}

TEST_CASE("dp agrees with the branch and bound solver")
{
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t n = 1; m * n <= 24; ++n) {
            const auto dp = grid_value(m, n);
            const auto g = grid_graph(m, n);
            CHECK(dp.value == roman2_domination_number(g));
            CHECK(check_r2df(g, dp.certificate).valid);
            CHECK(weight(dp.certificate) == dp.value);
        }
}

TEST_CASE("dp is symmetric in the grid dimensions")
{
    for (std::size_t m = 1; m <= 5; ++m)
        for (std::size_t n = 1; n <= 5; ++n)
            CHECK(grid_value(m, n).value == grid_value(n, m).value);
}

TEST_CASE("closed forms")
{
    CHECK(gamma2_grid_formula(2, 9) == 9);
    CHECK(gamma2_grid_formula(3, 6) == 8);
    CHECK(gamma2_grid_formula(4, 5) == 10);
    CHECK(r2_grid_bound_formula(3, 6) == 8);
    CHECK(r2_grid_bound_formula(3, 7) == 10);
    CHECK(r2_grid_bound_formula(4, 9) == 16);
    CHECK_THROWS_AS(gamma2_grid_formula(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma2_grid_formula(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(r2_grid_bound_formula(5, 3), std::invalid_argument);
}

TEST_CASE("gamma_2 closed forms match the solver on small grids")
{
    for (std::size_t n = 2; n <= 7; ++n) {
        CHECK(two_domination_number(grid_graph(2, n)) == gamma2_grid_formula(2, n));
        CHECK(two_domination_number(grid_graph(3, n)) == gamma2_grid_formula(3, n));
        if (n >= 3)
            CHECK(two_domination_number(grid_graph(4, n)) == gamma2_grid_formula(4, n));
    }
}

TEST_CASE("constructions")
{
    CHECK(weight(build_grid_labeling(3, 7)) == 10);
    CHECK(weight(build_grid_labeling(2, 5)) == 5);
    CHECK(weight(build_grid_labeling(4, 7)) <= 13);
    for (std::size_t m = 2; m <= 4; ++m)
        for (std::size_t n = 2; n <= 30; ++n) {
            const auto f = build_grid_labeling(m, n);
            CHECK(check_r2df(grid_graph(m, n), f).valid);
            CHECK(weight(f) <= r2_grid_bound_formula(m, n));
        }
}

TEST_CASE("sharpness table")
{
    const auto rows = sharpness_table(13);
    const auto& r210 = row_at(rows, 2, 10);
    CHECK(r210.dp_value == 10);
    CHECK(r210.sharp == true);
    const auto& r312 = row_at(rows, 3, 12);
    CHECK(r312.gamma2_formula == 16);
    CHECK(r312.r2_bound_formula == 16);
    CHECK(r312.dp_value <= 16);
    const auto& r313 = row_at(rows, 3, 13);
    CHECK(r313.gamma2_formula == 18);
    CHECK(r313.r2_bound_formula == 17);
    CHECK(r313.dp_value < 18);
    CHECK_FALSE(r313.findings.empty());
    CHECK(row_at(rows, 4, 4).dp_value == 8);
    CHECK(format_grid_tsv(rows) == format_grid_tsv(sharpness_table(13, 4)));
}
