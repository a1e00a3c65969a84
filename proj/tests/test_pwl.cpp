#include <doctest.h>

#include <random>

#include "core/errors.hpp"
#include "core/pwl.hpp"

using namespace corridor;

TEST_CASE("pwl evaluation and zero extension") {
    PwlFunction f({0.0, 1.0, 3.0}, {0.0, 2.0, 0.0});
    CHECK(f(0.5) == doctest::Approx(1.0));
    CHECK(f(2.0) == doctest::Approx(1.0));
    CHECK(f(-1.0) == 0.0);
    CHECK(f(5.0) == 0.0);
    CHECK(f(1.0) == doctest::Approx(2.0));

    PwlFunction c = PwlFunction::constant(0.0, 2.0, 3.0, PwlFunction::Extrapolation::Clamp);
    CHECK(c(10.0) == 3.0);
    CHECK(c(-10.0) == 3.0);
}

TEST_CASE("step functions carry jumps, right-continuous") {
    PwlFunction q = PwlFunction::step({0.0, 1.0, 2.0}, {5.0, 3.0});
    CHECK(q(0.5) == 5.0);
    CHECK(q(1.0) == 3.0);            // right value at the jump
    CHECK(q.value_left(1.0) == 5.0);
    CHECK(q(1.5) == 3.0);
    CHECK(q.integral() == doctest::Approx(8.0));
    CHECK(q.integral(0.5, 1.5) == doctest::Approx(2.5 + 1.5));
}

TEST_CASE("pointwise arithmetic is exact at random samples") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> pick(-1.0, 6.0);
    PwlFunction f({0.0, 1.0, 2.0, 4.0}, {0.0, 1.0, -1.0, 0.0});
    PwlFunction g = PwlFunction::step({0.5, 2.5, 5.0}, {2.0, -3.0});
    PwlFunction sum = f + g;
    PwlFunction diff = f - g;
    for (int s = 0; s < 1000; ++s) {
        double t = pick(rng);
        CHECK(sum(t) == doctest::Approx(f(t) + g(t)).epsilon(1e-12));
        CHECK(diff(t) == doctest::Approx(f(t) - g(t)).epsilon(1e-12));
    }
}

TEST_CASE("clip inserts exact crossings") {
    PwlFunction f({0.0, 2.0, 4.0}, {-2.0, 2.0, -2.0});
    PwlFunction c = f.clipped_below(0.0);
    CHECK(c(0.0) == 0.0);
    CHECK(c(1.0) == 0.0);
    CHECK(c(1.0 + 1e-12) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(c(2.0) == 2.0);
    CHECK(c(3.0) == 0.0);
    CHECK(c.integral() == doctest::Approx(2.0));
}

TEST_CASE("monotone inverse finds leftmost preimage") {
    PwlFunction f({0.0, 1.0, 2.0, 3.0}, {0.0, 1.0, 1.0, 4.0},
                  PwlFunction::Extrapolation::Clamp);
    CHECK(f.inverse(0.5) == doctest::Approx(0.5));
    CHECK(f.inverse(1.0) == doctest::Approx(1.0));
    CHECK(f.inverse(2.5) == doctest::Approx(2.5));
    CHECK(f.inverse(-1.0) == doctest::Approx(0.0));
    CHECK_THROWS_AS((void)f.inverse(9.0), Error);
}

TEST_CASE("restriction and shift") {
    PwlFunction f({0.0, 4.0}, {0.0, 4.0});
    PwlFunction r = f.restricted(1.0, 3.0);
    CHECK(r.support_begin() == 1.0);
    CHECK(r.support_end() == 3.0);
    CHECK(r(2.0) == doctest::Approx(2.0));
    PwlFunction s = f.shifted(1.5);
    CHECK(s(2.0) == doctest::Approx(0.5));
}

TEST_CASE("validation rejects malformed inputs") {
    CHECK_THROWS_AS(PwlFunction({1.0, 0.0}, {0.0, 0.0}), Error);
    CHECK_THROWS_AS(PwlFunction({0.0, 0.0, 0.0}, {0.0, 1.0, 2.0}), Error);
    CHECK_THROWS_AS(PwlFunction({0.0}, {1.0, 2.0}), Error);
}
