#include <doctest.h>

#include <cmath>

#include "analytic/due.hpp"
#include "pqsim/simulate.hpp"
#include "pqsim/verify.hpp"
#include "reduction/reduce.hpp"

using namespace corridor;

namespace {

CorridorNetwork example_net(Direction dir, std::vector<double> c = {0.0, 0.0, 0.0}) {
    CorridorNetwork net;
    net.capacity = {50.0, 30.0, 10.0};
    net.demand = {100.0, 350.0, 250.0};
    net.free_flow_time = std::move(c);
    net.horizon = 60.0;
    net.direction = dir;
    return net;
}

}  // namespace

TEST_CASE("departure curve of a point queue under constant overload") {
    // inflow 2 mu on [0, Q/(2 mu)]: queue peaks at Q/2, last vehicle waits Q/(2 mu)
    double mu = 10.0, q_total = 100.0;
    double t_in = q_total / (2.0 * mu);
    PwlFunction arr({0.0, t_in}, {0.0, q_total}, PwlFunction::Extrapolation::Clamp);
    PwlFunction dep = point_queue_departures(arr, mu);
    CHECK(dep(t_in) == doctest::Approx(mu * t_in));
    CHECK(dep.values().back() == doctest::Approx(q_total));
    CHECK(dep.support_end() == doctest::Approx(q_total / mu));
    double peak_delay = (arr(t_in) - dep(t_in)) / mu;
    CHECK(peak_delay == doctest::Approx(q_total / (2.0 * mu)));
}

TEST_CASE("below-capacity inflow passes at free flow") {
    CorridorNetwork net = example_net(Direction::Morning, {1.0, 2.5, 4.0});
    InflowProfile inflows;
    inflows.cumulative.resize(3);
    inflows.cumulative[2] = PwlFunction({0.0, 30.0}, {0.0, 9.0 * 30.0},
                                        PwlFunction::Extrapolation::Clamp);  // rate 9 < 10
    auto sim = simulate(net, inflows);
    for (int b = 0; b < 3; ++b)
        CHECK((sim.delay[b].empty() || sim.delay[b].max_value() <= 1e-9));
    CHECK(sim.terminal_time(2, 12.0) == doctest::Approx(12.0 + 4.0));
    // conservation through the whole corridor
    CHECK(sim.terminal_arrival[2].values().back() == doctest::Approx(270.0));
}

TEST_CASE("conservation and FIFO through congested bottlenecks") {
    CorridorNetwork net = example_net(Direction::Morning);
    InflowProfile inflows;
    inflows.cumulative.resize(3);
    // deliberately bursty inflows
    inflows.cumulative[0] = PwlFunction({20.0, 24.0}, {0.0, 100.0}, PwlFunction::Extrapolation::Clamp);
    inflows.cumulative[1] = PwlFunction({10.0, 20.0, 26.0}, {0.0, 300.0, 350.0},
                                        PwlFunction::Extrapolation::Clamp);
    inflows.cumulative[2] = PwlFunction({5.0, 30.0}, {0.0, 250.0}, PwlFunction::Extrapolation::Clamp);
    auto sim = simulate(net, inflows);
    for (int b = 0; b < 3; ++b) {
        // queues clear and mass is conserved
        CHECK(sim.departure_total[b].values().back() ==
              doctest::Approx(sim.arrival_total[b].values().back()));
        // departures never outrun arrivals
        auto grid = merge_breakpoints(sim.arrival_total[b].breakpoints(),
                                      sim.departure_total[b].breakpoints());
        for (double t : grid) {
            CHECK(sim.departure_total[b](t) <= sim.arrival_total[b](t) + 1e-9);
            // FIFO: class splits add back to the totals
            double split = 0.0;
            for (int c = 0; c < 3; ++c)
                if (!sim.class_departure[b][c].empty()) split += sim.class_departure[b][c](t);
            CHECK(split == doctest::Approx(sim.departure_total[b](t)).epsilon(1e-9));
        }
        // capacity respected: departures grow at most at rate mu
        const auto& d = sim.departure_total[b];
        for (std::size_t j = 0; j + 1 < d.breakpoints().size(); ++j) {
            double h = d.breakpoints()[j + 1] - d.breakpoints()[j];
            if (h <= 0.0) continue;
            double rate = (d.values()[j + 1] - d.values()[j]) / h;
            CHECK(rate <= net.capacity[b] * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("causality: later inflow does not change earlier delays") {
    CorridorNetwork net = example_net(Direction::Morning);
    InflowProfile base;
    base.cumulative.resize(3);
    base.cumulative[1] = PwlFunction({10.0, 20.0}, {0.0, 300.0}, PwlFunction::Extrapolation::Clamp);
    InflowProfile shifted = base;
    shifted.cumulative[2] = PwlFunction({40.0, 50.0}, {0.0, 100.0},
                                        PwlFunction::Extrapolation::Clamp);
    auto a = simulate(net, base);
    auto b = simulate(net, shifted);
    for (double t = 0.0; t <= 35.0; t += 0.7)
        CHECK(a.delay[1](t) == doctest::Approx(b.delay[1](t)).epsilon(1e-12));
}

TEST_CASE("replayed closed-form equilibria verify as equilibria") {
    for (Direction dir : {Direction::Morning, Direction::Evening}) {
        auto net = example_net(dir);
        auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
        auto dso = solve_dso(net, s);
        auto due = solve_due(dso, net, s);
        auto sim = simulate(net, inflows_from_due(net, due));

        // realized bottleneck delays reproduce the closed-form queues: the
        // commuter indexed by t meets bottleneck b at tau_b(t) and waits w_b(t)
        double rho_max = 6.25;
        for (int b = 0; b < 3; ++b) {
            double sup = 0.0;
            const auto& w = due.delay[b];
            if (w.empty()) continue;
            for (double t = w.support_begin(); t <= w.support_end(); t += 0.01) {
                double eulerian = due.tau[b](t);
                sup = std::max(sup, std::fabs(sim.delay[b](eulerian) - w(t)));
            }
            CHECK(sup <= 1e-6);
        }
        auto rep = verify_equilibrium(sim, s, 1e-6 * rho_max);
        CHECK(rep.equilibrium);
        CHECK(rep.max_spread <= 1e-6 * rho_max);
        for (int i = 0; i < 3; ++i)
            CHECK(rep.cost_low[i] == doctest::Approx(due.cost[i]).epsilon(1e-7));
    }
}

TEST_CASE("replayed system optimum is not an equilibrium without tolls") {
    auto net = example_net(Direction::Morning);
    auto s = ScheduleDelay::piecewise_v(0.5, 0.5, 30.0);
    auto dso = solve_dso(net, s);
    auto sim = simulate(net, inflows_from_dso(net, dso));
    auto rep = verify_equilibrium(sim, s, 1e-6 * 6.25);
    CHECK_FALSE(rep.equilibrium);
    CHECK(rep.max_spread > 0.1);
}

TEST_CASE("zero inflow verifies vacuously") {
    auto net = example_net(Direction::Morning);
    InflowProfile inflows;
    inflows.cumulative.resize(3);
    auto sim = simulate(net, inflows);
    auto rep = verify_equilibrium(sim, ScheduleDelay::piecewise_v(0.5, 0.5, 30.0), 1e-9);
    CHECK(rep.equilibrium);
    CHECK(rep.max_spread == 0.0);
}
