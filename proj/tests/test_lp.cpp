#include <doctest.h>

#include <cmath>

#include "analytic/dso.hpp"
#include "numeric/compare.hpp"
#include "numeric/lp.hpp"
#include "reduction/reduce.hpp"

using namespace corridor;

namespace {

CorridorNetwork example1_net() {
    CorridorNetwork net;
    net.capacity = {50.0, 30.0, 10.0};
    net.demand = {100.0, 350.0, 250.0};
    net.free_flow_time = {0.0, 0.0, 0.0};
    net.horizon = 60.0;
    return net;
}

}  // namespace

TEST_CASE("zero demand solves to zero flow and objective") {
    CorridorNetwork net = example1_net();
    net.demand = {0.0, 0.0, 0.0};
    auto lp = build_dso_lp(net, ScheduleDelay::piecewise_v(0.5, 0.5, 30.0), TimeGrid::over(60.0, 20));
    auto sol = solve_lp(lp);
    CHECK(sol.objective == doctest::Approx(0.0).epsilon(1e-8));
    CHECK(sol.flow.lpNorm<Eigen::Infinity>() <= 1e-6);
}

TEST_CASE("two cells put the mass into the cheaper one") {
    CorridorNetwork net;
    net.capacity = {10.0};
    net.free_flow_time = {0.0};
    net.horizon = 2.0;
    net.demand = {10.0};  // one cell at capacity
    // desired time in the second cell makes it strictly cheaper
    auto s = ScheduleDelay::piecewise_v(1.0, 1.0, 1.6);
    auto lp = build_dso_lp(net, s, TimeGrid::over(2.0, 2));
    auto sol = solve_lp(lp);
    CHECK(sol.rate(1, 0, 1) == doctest::Approx(10.0).epsilon(1e-6));
    CHECK(sol.rate(0, 0, 1) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("finite program reproduces the closed-form optimum") {
    auto net = example1_net();
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto grid = TimeGrid::over(60.0, 600);
    auto lp = build_dso_lp(net, s, grid);
    auto sol = solve_lp(lp);
    auto dso = solve_dso(net, s);

    auto rep = compare_lp(net, s, dso, lp, sol);
    CHECK(rep.objective_gap_rel <= 0.01);
    CHECK(rep.mass_gap_rel <= 1e-7);
    // capacity-row duals track the closed-form prices
    CHECK(rep.price_gap_sup <= 2.0 * 0.5 * grid.dt + 1e-6);
    CHECK(sol.gap <= 1e-7);
}

TEST_CASE("reduction leaves the optimum unchanged") {
    CorridorNetwork net;
    net.capacity = {50.0, 60.0, 20.0};
    net.demand = {100.0, 220.0, 130.0};
    net.free_flow_time = {0.0, 0.0, 0.0};
    net.horizon = 80.0;
    auto s = ScheduleDelay::piecewise_v(0.4, 0.6, 40.0);
    auto grid = TimeGrid::over(80.0, 200);

    auto red = reduce(net);
    REQUIRE(red.size() < net.size());
    auto full = solve_lp(build_dso_lp(net, s, grid));
    auto small = solve_lp(build_dso_lp(red.network, s, grid));
    CHECK(full.objective == doctest::Approx(small.objective).epsilon(1e-6));
}

TEST_CASE("infeasible demand is reported") {
    CorridorNetwork net;
    net.capacity = {10.0};
    net.free_flow_time = {0.0};
    net.demand = {1000.0};
    net.horizon = 10.0;
    auto lp = build_dso_lp(net, ScheduleDelay::piecewise_v(1.0, 1.0, 5.0), TimeGrid::over(10.0, 10));
    CHECK_THROWS_AS((void)solve_lp(lp), Error);
}
