#include <doctest.h>

#include <random>

#include "analytic/dso.hpp"
#include "reduction/disaggregate.hpp"
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

ScheduleDelay symmetric_half() { return ScheduleDelay::piecewise_v(0.5, 0.5, 30.0); }

}  // namespace

TEST_CASE("three-bottleneck corridor closed form") {
    auto net = example1_net();
    auto s = symmetric_half();
    auto sol = solve_dso(net, s);

    CHECK(sol.merged_capacity[0] == doctest::Approx(20.0));
    CHECK(sol.merged_capacity[1] == doctest::Approx(20.0));
    CHECK(sol.merged_capacity[2] == doctest::Approx(10.0));

    CHECK(sol.windows[0].length() == doctest::Approx(5.0));
    CHECK(sol.windows[1].length() == doctest::Approx(17.5));
    CHECK(sol.windows[2].length() == doctest::Approx(25.0));

    CHECK(sol.cost[0] == doctest::Approx(1.25));
    CHECK(sol.cost[1] == doctest::Approx(4.375));
    CHECK(sol.cost[2] == doctest::Approx(6.25));

    CHECK(sol.windows[0].begin == doctest::Approx(27.5));
    CHECK(sol.windows[0].end == doctest::Approx(32.5));
    CHECK(sol.windows[1].begin == doctest::Approx(21.25));
    CHECK(sol.windows[1].end == doctest::Approx(38.75));
    CHECK(sol.windows[2].begin == doctest::Approx(17.5));
    CHECK(sol.windows[2].end == doctest::Approx(42.5));

    // price of the second bottleneck is constant rho_2 - rho_1 on the inner window
    for (double t : {27.5, 29.0, 31.0, 32.5})
        CHECK(sol.price[1](t) == doctest::Approx(3.125));
    // and rho_2 - s(t) strictly between the windows
    CHECK(sol.price[1](25.0) == doctest::Approx(4.375 - 2.5));
    CHECK(sol.price[1](20.0) == 0.0);
}

TEST_CASE("single bottleneck yields the classic all-or-nothing optimum") {
    CorridorNetwork net;
    net.capacity = {50.0};
    net.demand = {100.0};
    net.free_flow_time = {0.0};
    net.horizon = 60.0;
    auto s = symmetric_half();
    auto sol = solve_dso(net, s);
    CHECK(sol.windows[0].length() == doctest::Approx(2.0));
    CHECK(sol.flow[0](sol.windows[0].begin + 0.5) == doctest::Approx(50.0));
    CHECK(sol.flow[0](sol.windows[0].begin - 0.5) == 0.0);
    double mid = 0.5 * (sol.windows[0].begin + sol.windows[0].end);
    CHECK(s.eval(sol.windows[0].begin) == doctest::Approx(s.eval(sol.windows[0].end)));
    CHECK(sol.price[0](mid) == doctest::Approx(sol.cost[0]));
}

TEST_CASE("non-reduced input is refused") {
    CorridorNetwork net;
    net.capacity = {50.0, 60.0};
    net.demand = {100.0, 350.0};
    net.free_flow_time = {0.0, 0.0};
    net.horizon = 60.0;
    CHECK_THROWS_AS((void)solve_dso(net, symmetric_half()), Error);
}

TEST_CASE("disaggregation of a merged corridor") {
    CorridorNetwork net;
    net.capacity = {50.0, 60.0};
    net.demand = {100.0, 350.0};
    net.free_flow_time = {0.0, 0.0};
    net.horizon = 60.0;
    auto s = symmetric_half();
    auto red = reduce(net);
    auto reduced_sol = solve_dso(red.network, s);
    CHECK(reduced_sol.windows[0].length() == doctest::Approx(9.0));

    auto sol = disaggregate(reduced_sol, red, net);
    CHECK(sol.cost[0] == doctest::Approx(2.25));
    CHECK(sol.cost[1] == doctest::Approx(2.25));
    CHECK_FALSE(sol.flow_split_unique);
    // screened-out bottleneck charges nothing
    for (double t = 0.0; t <= 60.0; t += 0.75) CHECK(sol.price[1](t) == 0.0);
    // proportional split conserves each origin's demand
    CHECK(sol.flow[0].integral() == doctest::Approx(100.0));
    CHECK(sol.flow[1].integral() == doctest::Approx(350.0));
    // and the merged flow fills the surviving capacity
    double mid = 0.5 * (sol.windows[0].begin + sol.windows[0].end);
    CHECK(sol.flow[0](mid) + sol.flow[1](mid) == doctest::Approx(50.0));
}

TEST_CASE("identity disaggregation passes through") {
    auto net = example1_net();
    auto s = symmetric_half();
    auto red = reduce(net);
    auto sol = solve_dso(red.network, s);
    auto mapped = disaggregate(sol, red, net);
    CHECK(mapped.flow_split_unique);
    for (int i = 0; i < 3; ++i) {
        CHECK(mapped.cost[i] == doctest::Approx(sol.cost[i]));
        CHECK(mapped.windows[i].begin == doctest::Approx(sol.windows[i].begin));
    }
}

TEST_CASE("nested windows, positive prices, telescoped costs on random corridors") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> pick_n(1, 5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = pick_n(rng);
        std::vector<double> mu(n), q(n), c(n);
        double cap = 100.0;
        for (int i = 0; i < n; ++i) {
            mu[i] = cap;
            cap *= 0.3 + 0.5 * unit(rng);
            q[i] = 20.0 + 200.0 * unit(rng);
            c[i] = (i > 0 ? c[i - 1] : 0.0) + 2.0 * unit(rng);
        }
        CorridorNetwork net;
        net.capacity = mu;
        net.demand = q;
        net.free_flow_time = c;
        net.horizon = 400.0;
        double beta = 0.2 + 0.6 * unit(rng), gamma = 0.2 + 0.6 * unit(rng);
        auto s = ScheduleDelay::piecewise_v(beta, gamma, 200.0);
        if (!is_reduced(net)) continue;
        auto sol = solve_dso(net, s);

        for (int i = 1; i < n; ++i) {
            CHECK(sol.windows[i - 1].begin >= sol.windows[i].begin - 1e-9);
            CHECK(sol.windows[i - 1].end <= sol.windows[i].end + 1e-9);
        }
        for (int i = 0; i < n; ++i) {
            const auto& w = sol.windows[i];
            for (int g = 1; g < 40; ++g) {
                double t = w.begin + w.length() * g / 40.0;
                if (t <= w.begin || t >= w.end) continue;
                CHECK(sol.price[i](t) > 0.0);
                // telescoped identity sum_{j<=i} p_j + s + c_i = rho_i on the window
                double total = 0.0;
                for (int j = 0; j <= i; ++j) total += sol.price[j](t);
                CHECK(std::fabs(total + s.eval(t) + c[i] - sol.cost[i]) <= 1e-9);
            }
            // zero outside
            CHECK(sol.price[i](w.begin - 1.0) == 0.0);
            CHECK(sol.price[i](w.end + 1.0) == 0.0);
            // flow mass equals demand
            CHECK(sol.flow[i].integral() == doctest::Approx(q[i]).epsilon(1e-12));
        }
        // off-window cost dominance: sum p_j + s + c_i >= rho_i everywhere
        for (int i = 0; i < n; ++i) {
            for (int g = 0; g <= 60; ++g) {
                double t = net.horizon * g / 60.0;
                double total = 0.0;
                for (int j = 0; j <= i; ++j) total += sol.price[j](t);
                CHECK(total + s.eval(t) + c[i] >= sol.cost[i] - 1e-9);
            }
        }
    }
}
