#include <doctest.h>

#include <cmath>

#include "analytic/due.hpp"
#include "reduction/reduce.hpp"

using namespace corridor;

namespace {

CorridorNetwork example_net(Direction dir) {
    CorridorNetwork net;
    net.capacity = {50.0, 30.0, 10.0};
    net.demand = {100.0, 350.0, 250.0};
    net.free_flow_time = {0.0, 0.0, 0.0};
    net.horizon = 60.0;
    net.direction = dir;
    return net;
}

}  // namespace

TEST_CASE("morning feasibility: symmetric half slopes pass") {
    auto net = example_net(Direction::Morning);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto rep = check_due_feasibility(net, s, dso.windows, Direction::Morning);
    CHECK(rep.feasible);
}

TEST_CASE("morning feasibility: steep late slope violates the capacity-ratio bound") {
    auto net = example_net(Direction::Morning);
    auto s = ScheduleDelay::piecewise_v(0.5, 8.0, 30.0);
    auto dso = solve_dso(net, s);
    auto rep = check_due_feasibility(net, s, dso.windows, Direction::Morning);
    REQUIRE_FALSE(rep.feasible);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.kind == FeasibilityViolation::Kind::CapacityRatio && v.bottleneck == 0 &&
            v.slope == doctest::Approx(8.0) && v.bound == doctest::Approx(50.0 / 30.0 - 1.0))
            found = true;
    CHECK(found);
    CHECK_THROWS_AS((void)solve_due(dso, net, s), Error);
}

TEST_CASE("evening feasibility: steep early slope violates the mirrored bound") {
    auto net = example_net(Direction::Evening);
    auto s = ScheduleDelay::piecewise_v(8.0, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto rep = check_due_feasibility(net, s, dso.windows, Direction::Evening);
    REQUIRE_FALSE(rep.feasible);
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.kind == FeasibilityViolation::Kind::CapacityRatio && v.bottleneck == 0 &&
            v.slope == doctest::Approx(-8.0) && v.bound == doctest::Approx(1.0 - 50.0 / 30.0))
            found = true;
    CHECK(found);
}

TEST_CASE("morning equilibrium flows tilt by the schedule slope") {
    auto net = example_net(Direction::Morning);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto due = solve_due(dso, net, s);

    // origin 0 rates on its window: 20 + 0.5*30 early, 20 - 0.5*30 late
    CHECK(due.flow[0](28.0) == doctest::Approx(35.0));
    CHECK(due.flow[0](31.0) == doctest::Approx(5.0));
    // origin 2 outside the middle window: plain capacity
    CHECK(due.flow[2](18.0) == doctest::Approx(10.0));
    CHECK(due.flow[2](42.0) == doctest::Approx(10.0));

    // delays equal prices, costs equal
    for (int i = 0; i < 3; ++i) {
        CHECK(due.cost[i] == doctest::Approx(dso.cost[i]));
        CHECK(sup_distance(due.delay[i], dso.price[i]) <= 1e-12);
        CHECK(due.flow[i].integral() == doctest::Approx(net.demand[i]).epsilon(1e-10));
        CHECK(due.flow[i].min_value() >= 0.0);
    }

    // aggregate destination arrivals match the system optimum pointwise
    PwlFunction agg_due, agg_dso;
    for (int i = 0; i < 3; ++i) {
        agg_due = agg_due + due.flow[i];
        agg_dso = agg_dso + dso.flow[i];
    }
    for (double t = 0.25; t < 60.0; t += 0.616)
        CHECK(agg_due(t) == doctest::Approx(agg_dso(t)).epsilon(1e-9));
}

TEST_CASE("single-bottleneck morning equilibrium is the classic bottleneck model") {
    CorridorNetwork net;
    net.capacity = {50.0};
    net.demand = {100.0};
    net.free_flow_time = {0.0};
    net.horizon = 60.0;
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto due = solve_due(dso, net, s);
    // destination arrivals at capacity across the whole window
    double mid = 0.5 * (dso.windows[0].begin + dso.windows[0].end);
    CHECK(due.flow[0](mid - 0.4) == doctest::Approx(50.0));
    CHECK(due.flow[0](mid + 0.4) == doctest::Approx(50.0));
    CHECK(due.delay[0](mid) == doctest::Approx(dso.cost[0]));
}

TEST_CASE("evening equilibrium flows and bottleneck departures") {
    auto net = example_net(Direction::Evening);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto due = solve_due(dso, net, s);

    // (1 -/+ 0.5) * 20 on the first window
    CHECK(due.flow[0](28.0) == doctest::Approx(30.0));
    CHECK(due.flow[0](31.0) == doctest::Approx(10.0));

    for (int i = 0; i < 3; ++i) {
        CHECK(due.flow[i].integral() == doctest::Approx(net.demand[i]).epsilon(1e-10));
        CHECK(due.cost[i] == doctest::Approx(dso.cost[i]));
        CHECK(sup_distance(due.delay[i], dso.price[i]) <= 1e-12);
    }

    // bottleneck departures: mu_1 inside window 1, (1 - sdot) mu_2 outside
    auto x0 = evening_bottleneck_departure(due, net, s, 0);
    CHECK(x0(28.0) == doctest::Approx(50.0));
    CHECK(x0(23.0) == doctest::Approx((1.0 + 0.5) * 30.0));
    CHECK(x0(37.0) == doctest::Approx((1.0 - 0.5) * 30.0));
    // capacity respected everywhere under the feasibility screen
    CHECK(x0.max_value() <= 50.0 + 1e-9);
    for (int i = 0; i < 3; ++i) {
        auto x = evening_bottleneck_departure(due, net, s, i);
        CHECK(x.max_value() <= net.capacity[i] + 1e-9);
    }
}

TEST_CASE("toll revenue equals total queuing delay cost") {
    for (Direction dir : {Direction::Morning, Direction::Evening}) {
        auto net = example_net(dir);
        auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
        auto dso = solve_dso(net, s);
        auto due = solve_due(dso, net, s);

        // revenue: prices times bottleneck throughput (capacity inside each window)
        double revenue = 0.0;
        for (int i = 0; i < 3; ++i) revenue += dso.price[i].integral() * net.capacity[i];

        // delay cost: w_i integrated against the equilibrium flows through i
        double delay_cost = 0.0;
        for (int i = 0; i < 3; ++i) {
            PwlFunction through;
            for (int j = i; j < 3; ++j) through = through + due.flow[j];
            const auto& w = due.delay[i];
            auto grid = merge_breakpoints(w.breakpoints(), through.breakpoints());
            for (std::size_t g = 0; g + 1 < grid.size(); ++g) {
                double a = grid[g], b = grid[g + 1];
                if (b <= a) continue;
                double m = 0.5 * (a + b);
                // w linear, flow constant per piece: exact trapezoid
                delay_cost += 0.5 * (w(a) + w.value_left(b)) * through(m) * (b - a);
            }
        }
        CHECK(revenue == doctest::Approx(delay_cost).epsilon(1e-9));
    }
}
