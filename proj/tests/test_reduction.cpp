#include <doctest.h>

#include <random>

#include "reduction/reduce.hpp"

using namespace corridor;

namespace {

CorridorNetwork make_net(std::vector<double> mu, std::vector<double> q, double horizon = 60.0) {
    CorridorNetwork net;
    net.capacity = std::move(mu);
    net.demand = std::move(q);
    net.free_flow_time.assign(net.capacity.size(), 0.0);
    net.horizon = horizon;
    return net;
}

}  // namespace

TEST_CASE("normalized demands of an all-surviving corridor") {
    auto net = make_net({50.0, 30.0, 10.0}, {100.0, 350.0, 250.0});
    auto table = normalized_demands(net);
    REQUIRE(table.size() == 3);
    CHECK(table[0] == doctest::Approx(5.0));
    CHECK(table[1] == doctest::Approx(17.5));
    CHECK(table[2] == doctest::Approx(25.0));
}

TEST_CASE("single bottleneck normalized demand") {
    auto net = make_net({50.0}, {100.0});
    auto table = normalized_demands(net);
    REQUIRE(table.size() == 1);
    CHECK(table[0] == doctest::Approx(2.0));
}

TEST_CASE("larger upstream capacity forces a false bottleneck") {
    auto net = make_net({50.0, 60.0}, {100.0, 350.0});
    auto red = reduce(net);
    REQUIRE(red.size() == 1);
    CHECK(red.false_bottlenecks == std::vector<int>{1});
    CHECK(red.network.capacity[0] == 50.0);
    CHECK(red.network.demand[0] == doctest::Approx(450.0));
    auto table = normalized_demands(net);
    REQUIRE(table.size() == 1);
    CHECK(table[0] == doctest::Approx(9.0));
    CHECK(red.origin_map[0] == std::vector<int>{0, 1});
}

TEST_CASE("identity reduction keeps everything") {
    auto net = make_net({50.0, 30.0, 10.0}, {100.0, 350.0, 250.0});
    auto red = reduce(net);
    CHECK(red.false_bottlenecks.empty());
    CHECK(red.size() == 3);
    CHECK(is_reduced(net));
}

TEST_CASE("single bottleneck is always its own reduction") {
    auto net = make_net({42.0}, {10.0});
    auto red = reduce(net);
    CHECK(red.size() == 1);
    CHECK(red.false_bottlenecks.empty());
}

TEST_CASE("normalized-demand ties merge") {
    // equal normalized demand: 100/20 = 5 and 150/30 = 5 -> upstream is false
    auto net = make_net({50.0, 30.0}, {100.0, 150.0});
    auto red = reduce(net);
    CHECK(red.size() == 1);
    CHECK(red.network.demand[0] == doctest::Approx(250.0));
}

TEST_CASE("reduction properties over random corridors") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> pick_n(1, 6);
    std::uniform_real_distribution<double> pick_mu(5.0, 100.0);
    std::uniform_real_distribution<double> pick_q(1.0, 400.0);
    for (int trial = 0; trial < 500; ++trial) {
        int n = pick_n(rng);
        std::vector<double> mu(n), q(n);
        for (int i = 0; i < n; ++i) {
            mu[i] = pick_mu(rng);
            q[i] = pick_q(rng);
        }
        auto net = make_net(mu, q);
        auto red = reduce(net);

        // conservation
        CHECK(red.network.total_demand() == doctest::Approx(net.total_demand()));

        // capacities strictly decrease upstream after reduction
        for (int r = 1; r < red.size(); ++r)
            CHECK(red.network.capacity[r] < red.network.capacity[r - 1]);

        // survivor criterion: normalized demands strictly increase upstream
        auto table = normalized_demands(red.network);
        for (std::size_t r = 1; r < table.size(); ++r) CHECK(table[r] > table[r - 1]);

        // every screened-out bottleneck has a downstream survivor with at
        // least its normalized demand, referenced to the surviving structure
        for (int f : red.false_bottlenecks) {
            int below = -1, above = -1;
            for (std::size_t r = 0; r < red.survivors.size(); ++r) {
                if (red.survivors[r] < f) below = static_cast<int>(r);
                if (red.survivors[r] > f && above < 0) above = static_cast<int>(r);
            }
            REQUIRE(below >= 0);  // bottleneck 0 always survives
            double drop = net.capacity[f] - (above >= 0 ? net.capacity[red.survivors[above]] : 0.0);
            bool dominated = drop <= 0.0;
            if (!dominated) {
                double mass = 0.0;
                int upto = above >= 0 ? red.survivors[above] : n;
                for (int j = f; j < upto; ++j) mass += net.demand[j];
                dominated = table[below] >= mass / drop - 1e-9;
            }
            CHECK(dominated);
        }

        // idempotent
        auto red2 = reduce(red.network);
        CHECK(red2.false_bottlenecks.empty());
        CHECK(red2.size() == red.size());
    }
}
