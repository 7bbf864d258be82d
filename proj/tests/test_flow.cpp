#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "cplab/flow.hpp"

using namespace cplab;

TEST_CASE("r = 1 is a fixed point of the radial flow") {
    for (double t : {0.1, 1.0, 5.0, 10.0}) {
        REQUIRE(logistic_analytic(1.0, t) == Catch::Approx(1.0).margin(1e-15));
        REQUIRE(logistic_rk4(1.0, t) == Catch::Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("trajectories approach r = 1 monotonically from both sides") {
    double prev = 0.5;
    for (double t = 0.5; t <= 30.0; t += 0.5) {
        double r = logistic_analytic(0.5, t);
        REQUIRE(r > prev);
        REQUIRE(r < 1.0);
        prev = r;
    }
    REQUIRE(std::fabs(logistic_analytic(0.5, 30.0) - 1.0) < 1e-9);

    prev = 2.0;
    for (double t = 0.5; t <= 30.0; t += 0.5) {
        double r = logistic_analytic(2.0, t);
        REQUIRE(r < prev);
        REQUIRE(r > 1.0);
        prev = r;
    }
}

TEST_CASE("analytic value at r0 = 2, t = 1") {
    double e = std::exp(1.0);
    REQUIRE(logistic_analytic(2.0, 1.0) == Catch::Approx(2 * e / (1 + 2 * (e - 1))).epsilon(1e-14));
    REQUIRE(logistic_analytic(2.0, 1.0) == Catch::Approx(1.22540).margin(5e-5));
}

TEST_CASE("RK4 tracks the analytic solution to 1e-8") {
    for (double r0 : {0.1, 0.5, 2.0, 10.0}) {
        for (double t : {1.0, 2.5, 5.0, 10.0}) {
            LogisticFlowResult r = logistic_flow(r0, t);
            REQUIRE(r.abs_diff() < 1e-8);
        }
    }
}

TEST_CASE("invalid radial arguments are rejected") {
    REQUIRE_THROWS_AS(logistic_analytic(0.0, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(logistic_rk4(-1.0, 1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(limit_cycle_flow({0.0, 0.0}, 1.0), std::invalid_argument);
}

TEST_CASE("limit cycle: periodic orbit on r = 1 and linear phase advance") {
    const double two_pi = 2.0 * std::numbers::pi;
    FlowState s = limit_cycle_flow({1.0, 0.0}, two_pi);
    REQUIRE(s.r == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(s.phi == Catch::Approx(0.0).margin(1e-12));

    s = limit_cycle_flow({0.5, 0.0}, 40.0);
    REQUIRE(s.r == Catch::Approx(1.0).margin(1e-12));

    for (double t : {0.3, 1.7, 9.9}) {
        FlowState u = limit_cycle_flow({0.7, 1.0}, t);
        REQUIRE(u.phi == Catch::Approx(std::fmod(1.0 + t, two_pi)).margin(1e-12));
    }
}
