#include <cmath>
#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "cplab/lorenz.hpp"

using namespace cplab;

TEST_CASE("equilibria of the vector field") {
    LorenzParams p;
    LorenzState o = lorenz_rhs({0, 0, 0}, p);
    REQUIRE(o.x == 0);
    REQUIRE(o.y == 0);
    REQUIRE(o.z == 0);
    // the origin stays put under integration
    TrajectorySegment t = integrate({0, 0, 0}, p, 1e-3, 100);
    REQUIRE(t.states.back().x == 0);
    REQUIRE(t.states.back().z == 0);

    // C+ = (sqrt(beta (rho - 1)), same, rho - 1)
    double c = std::sqrt(p.beta * (p.rho - 1));
    LorenzState f = lorenz_rhs({c, c, p.rho - 1}, p);
    REQUIRE(std::fabs(f.x) < 1e-12);
    REQUIRE(std::fabs(f.y) < 1e-12);
    REQUIRE(std::fabs(f.z) < 1e-12);
}

TEST_CASE("trajectories from generic starts stay bounded") {
    TrajectorySegment t = integrate({1, 1, 1}, {}, 1e-3, 100000, 100);
    double maxnorm = 0;
    for (const auto& s : t.states)
        maxnorm = std::max(maxnorm, std::sqrt(s.x * s.x + s.y * s.y + s.z * s.z));
    REQUIRE(maxnorm < 100.0);
}

TEST_CASE("divergence is the analytic Jacobian trace") {
    REQUIRE(divergence({10, 28, 8.0 / 3.0}) == Catch::Approx(-41.0 / 3.0).epsilon(1e-15));
    REQUIRE(divergence({0, 28, 0}) == -1.0);
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> u(0.1, 30.0);
    for (int i = 0; i < 50; ++i) REQUIRE(divergence({u(rng), u(rng), u(rng)}) < 0);
}

TEST_CASE("tangent-space volume contraction matches the trace") {
    LorenzParams p;
    std::vector<LorenzState> cloud = {
        {1, 1, 1}, {1.001, 1, 1}, {1, 1.001, 1}, {1, 1, 1.001}};
    ContractionReport rep = volume_contraction(cloud, p, 0.5);
    REQUIRE(rep.analytic == Catch::Approx(-41.0 / 3.0).epsilon(1e-15));
    REQUIRE(rep.rel_error < 0.05);
    REQUIRE(rep.rate == Catch::Approx(-41.0 / 3.0).epsilon(0.05));

    // sigma = beta = 0 contracts at exactly -1
    ContractionReport r0 = volume_contraction(cloud, {0, 28, 0}, 0.5);
    REQUIRE(r0.rate == Catch::Approx(-1.0).margin(1e-6));

    // rate independent of the base point (constant divergence)
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double lo = 0, hi = 0;
    for (int i = 0; i < 10; ++i) {
        LorenzState base{u(rng), u(rng), u(rng) + 20};
        std::vector<LorenzState> c2 = {base,
                                       {base.x + 1e-4, base.y, base.z},
                                       {base.x, base.y + 1e-4, base.z},
                                       {base.x, base.y, base.z + 1e-4}};
        double rate = volume_contraction(c2, p, 0.5).rate;
        if (i == 0) lo = hi = rate;
        lo = std::min(lo, rate);
        hi = std::max(hi, rate);
    }
    REQUIRE(hi - lo < 1e-6);

    REQUIRE_THROWS_AS(volume_contraction({{1, 1, 1}, {2, 2, 2}}, p, 0.5), std::invalid_argument);
    std::vector<LorenzState> flat = {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {3, 0, 0}};
    REQUIRE_THROWS_AS(volume_contraction(flat, p, 0.5), std::invalid_argument);
}

TEST_CASE("mirror symmetry is exact: integrate then mirror = mirror then integrate") {
    LorenzParams p;
    LorenzState a{1.3, -0.7, 19.0};
    LorenzState ma = mirror(a);
    for (int i = 0; i < 10000; ++i) {
        a = step_lorenz(a, p, 1e-3);
        ma = step_lorenz(ma, p, 1e-3);
        REQUIRE(ma.x == -a.x);
        REQUIRE(ma.y == -a.y);
        REQUIRE(ma.z == a.z);
    }
}

TEST_CASE("symbolize labels lobes at Z maxima") {
    LorenzParams p;
    // short segment near C+ stays in the X > 0 lobe
    double c = std::sqrt(p.beta * (p.rho - 1));
    TrajectorySegment near_cplus = integrate({c + 2, c + 2, p.rho - 1}, p, 1e-3, 4000);
    SymbolString s = symbolize(near_cplus);
    REQUIRE(!s.symbols.empty());
    for (char ch : s.symbols) REQUIRE(ch == 'R');
    // emission times strictly increase
    for (std::size_t i = 1; i < s.times.size(); ++i) REQUIRE(s.times[i] > s.times[i - 1]);

    REQUIRE_THROWS_AS(symbolize(TrajectorySegment{}), std::invalid_argument);
}

TEST_CASE("near-zero X at an event falls in the dead band and is skipped") {
    TrajectorySegment t;
    t.t0 = 0;
    t.dt = 0.1;
    t.states = {{1e-9, 0, 0}, {1e-9, 0, 1}, {1e-9, 0, 0}, {2, 0, 0}, {2, 0, 1}, {2, 0, 0}};
    SymbolString s = symbolize(t);
    REQUIRE(s.symbols == "R");  // only the |X| = 2 event counts
}

TEST_CASE("symbol strings are stable under dt halving over the validated window") {
    // The chaotic amplification of truncation error limits how far refinement
    // stability can reach; [20, 30] from this start is safely inside it.
    LorenzParams p;
    TrajectorySegment coarse = integrate({1, 1, 1}, p, 1e-3, 30000);
    TrajectorySegment fine = integrate({1, 1, 1}, p, 5e-4, 60000);
    SymbolString a = symbolize(coarse, 20.0, 30.0);
    SymbolString b = symbolize(fine, 20.0, 30.0);
    REQUIRE(!a.symbols.empty());
    REQUIRE(a.symbols == b.symbols);
}

TEST_CASE("mirrored initial conditions swap L and R") {
    LorenzParams p;
    TrajectorySegment t1 = integrate({1, 1, 1}, p, 1e-3, 40000);
    TrajectorySegment t2 = integrate(mirror({1, 1, 1}), p, 1e-3, 40000);
    SymbolString s1 = symbolize(t1, 5.0, 40.0);
    SymbolString s2 = symbolize(t2, 5.0, 40.0);
    REQUIRE(s1.symbols.size() == s2.symbols.size());
    REQUIRE(!s1.symbols.empty());
    for (std::size_t i = 0; i < s1.symbols.size(); ++i)
        REQUIRE(s1.symbols[i] == (s2.symbols[i] == 'L' ? 'R' : 'L'));
}

TEST_CASE("trajectory CSV embeds the JSON parameter header") {
    TrajectorySegment t = integrate({1, 1, 1}, {}, 1e-3, 10, 5);
    std::ostringstream os;
    trajectory_csv(t, os, "{\"dt\":0.001}");
    std::string out = os.str();
    REQUIRE(out.rfind("# {\"dt\":0.001}\n", 0) == 0);
    REQUIRE(out.find("t,x,y,z\n") != std::string::npos);
}

TEST_CASE("step validation") {
    REQUIRE_THROWS_AS(step_lorenz({1, 1, 1}, {}, 0.0), std::invalid_argument);
    LorenzState bad{std::numeric_limits<double>::quiet_NaN(), 0, 0};
    REQUIRE_THROWS_AS(step_lorenz(bad, {}, 1e-3), std::invalid_argument);
}
