#include <doctest.h>

#include "analytic/curves.hpp"
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

TEST_CASE("system-optimum curves carry no queues and clear") {
    auto net = example_net(Direction::Morning);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto curves = build_cumulative_curves(net, dso);
    double totals[] = {700.0, 600.0, 250.0};  // mass through bottlenecks 0, 1, 2
    for (int b = 0; b < 3; ++b) {
        CHECK(sup_distance(curves.arrival[b], curves.departure[b]) <= 1e-9);
        CHECK(curves.departure[b].values().back() == doctest::Approx(totals[b]));
        CHECK(curves.departure[b].is_nondecreasing(1e-12));
    }
}

TEST_CASE("morning equilibrium shares the optimum departure curves") {
    auto net = example_net(Direction::Morning);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto due = solve_due(dso, net, s);
    auto oc = build_cumulative_curves(net, dso);
    auto ec = build_cumulative_curves(net, due);
    for (int b = 0; b < 3; ++b) {
        CHECK(sup_distance(ec.departure[b], oc.departure[b]) <= 1e-8);
        // queues stay nonnegative and clear at the end
        auto grid = merge_breakpoints(ec.arrival[b].breakpoints(), ec.departure[b].breakpoints());
        for (double t : grid) CHECK(ec.arrival[b](t) >= ec.departure[b](t) - 1e-9);
        CHECK(ec.arrival[b].values().back() == doctest::Approx(ec.departure[b].values().back()));
        // horizontal distance between arrivals and departures is the price
        const auto& w = due.delay[b];
        for (double t = w.support_begin() + 0.2; t < w.support_end(); t += 0.37) {
            double count = ec.departure[b](due.sigma[b](t));
            double at_arrival = ec.arrival[b](due.tau[b](t));
            CHECK(count == doctest::Approx(at_arrival).epsilon(1e-9));
        }
    }
    // equilibrium disaggregate destination arrivals differ from the optimum
    CHECK(sup_distance(ec.destination_arrival[0], oc.destination_arrival[0]) > 1.0);
}

TEST_CASE("evening equilibrium keeps destination arrivals, reshapes departures") {
    auto net = example_net(Direction::Evening);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto due = solve_due(dso, net, s);
    auto oc = build_cumulative_curves(net, dso);
    auto ec = build_cumulative_curves(net, due);
    for (int i = 0; i < 3; ++i)
        CHECK(sup_distance(ec.destination_arrival[i], oc.destination_arrival[i]) <= 1e-8);
    CHECK(sup_distance(ec.departure[0], oc.departure[0]) > 1.0);
}

TEST_CASE("disaggregate curves recompose the aggregate") {
    auto net = example_net(Direction::Morning);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto curves = build_cumulative_curves(net, dso);
    // group i through bottleneck i equals D_i - D_{i+1} when free-flow times vanish
    for (int b = 0; b < 2; ++b) {
        PwlFunction diff = curves.departure[b] - curves.departure[b + 1];
        CHECK(sup_distance(diff, curves.origin_through[b]) <= 1e-9);
    }
}
