#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "levyhull/path.hpp"
#include "levyhull/rng.hpp"
#include "levyhull/stats.hpp"
#include "levyhull/synthesis.hpp"

using namespace levyhull;

TEST_CASE("jump law validation") {
    CHECK_THROWS_AS(JumpLaw::point_mass(0.0), std::invalid_argument);
    CHECK_THROWS_AS(JumpLaw::normal(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(JumpLaw::uniform(2.0, 1.0), std::invalid_argument);
    std::mt19937_64 eng(1);
    CHECK(JumpLaw::point_mass(1.5).sample(eng) == 1.5);
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(LevyMeasure::compound_poisson(-1.0, JumpLaw::point_mass(1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(LevyMeasure::stable_like(0.0, 0.0, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LevyMeasure::stable_like(1.0, 1.0, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(LevyMeasure::stable_like(1.0, 1.0, 0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(LevyMeasure::stable_like(1.0, 1.0, 0.5, 1.0, 2.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(LevyMeasure::table({}), std::invalid_argument);
    CHECK_THROWS_AS(LevyMeasure::table({{0.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("stable-like tail mass and truncation bias match closed forms") {
    const double cp = 1.3, cm = 0.6, alpha = 0.5, cap = 1.0;
    LevyMeasure nu = LevyMeasure::stable_like(cp, cm, alpha, cap);
    for (double eps : {1e-1, 1e-2, 1e-3}) {
        double expect_tail = (cp + cm) / alpha * (std::pow(eps, -alpha) - std::pow(cap, -alpha));
        CHECK(nu.tail_mass(eps) == doctest::Approx(expect_tail).epsilon(1e-12));
        double expect_small = (cp + cm) * std::pow(eps, 1.0 - alpha) / (1.0 - alpha);
        CHECK(nu.small_jump_mean_abs(eps) == doctest::Approx(expect_small).epsilon(1e-8));
    }
    double expect_bv = (cp + cm) * std::pow(cap, 1.0 - alpha) / (1.0 - alpha);
    CHECK(nu.bv_integral() == doctest::Approx(expect_bv).epsilon(1e-8));
    // one active floor kills that side's small-jump contribution below it
    LevyMeasure fl = LevyMeasure::stable_like(cp, cm, alpha, cap, 0.0, 0.25);
    double only_pos = cp * std::pow(0.1, 1.0 - alpha) / (1.0 - alpha);
    CHECK(fl.small_jump_mean_abs(0.1) == doctest::Approx(only_pos).epsilon(1e-8));
}

TEST_CASE("compound poisson path statistics line up with the generator") {
    LevyMeasure nu = LevyMeasure::compound_poisson(7.0, JumpLaw::uniform(0.5, 1.5));
    RngStream rng{2024, 0};
    std::vector<double> counts;
    for (std::size_t r = 0; r < 400; ++r)
        counts.push_back(double(simulate_compound_poisson(nu, Horizon{0.0, 1.0},
                                                          rng.fork(r)).jump_count()));
    auto ci = stats::ci95_mean(counts);
    CHECK(ci.lo < 7.0);
    CHECK(7.0 < ci.hi);
}

TEST_CASE("simulation is a pure function of the stream handle") {
    LevyMeasure nu = LevyMeasure::stable_like(1.0, 1.0, 0.5, 1.0);
    JumpPath a = simulate_bv_levy(nu, 1e-3, Horizon{0.0, 1.0}, RngStream{5, 9}).path;
    JumpPath b = simulate_bv_levy(nu, 1e-3, Horizon{0.0, 1.0}, RngStream{5, 9}).path;
    REQUIRE(a.jump_count() == b.jump_count());
    for (std::size_t k = 0; k < a.jump_count(); ++k) {
        CHECK(a.times()[k] == b.times()[k]);
        CHECK(a.sizes()[k] == b.sizes()[k]);
    }
}

TEST_CASE("coarser truncation keeps exactly the big jumps of the finer path") {
    LevyMeasure nu = LevyMeasure::stable_like(1.0, 0.7, 0.6, 1.0);
    RngStream rng{77, 0};
    for (std::size_t r = 0; r < 25; ++r) {
        JumpPath fine = simulate_bv_levy(nu, 1e-4, Horizon{0.0, 1.0}, rng.fork(r)).path;
        JumpPath coarse = simulate_bv_levy(nu, 1e-2, Horizon{0.0, 1.0}, rng.fork(r)).path;
        std::vector<std::pair<double, double>> expected;
        for (std::size_t k = 0; k < fine.jump_count(); ++k)
            if (std::abs(fine.sizes()[k]) >= 1e-2)
                expected.push_back({fine.times()[k], fine.sizes()[k]});
        REQUIRE(coarse.jump_count() == expected.size());
        for (std::size_t k = 0; k < expected.size(); ++k) {
            CHECK(coarse.times()[k] == expected[k].first);
            CHECK(coarse.sizes()[k] == expected[k].second);
        }
        CHECK(fine.jump_count() > coarse.jump_count());
    }
}

TEST_CASE("truncation bias equals the horizon times the small-jump mean") {
    LevyMeasure nu = LevyMeasure::stable_like(1.0, 1.0, 0.5, 1.0);
    BvSimulation sim = simulate_bv_levy(nu, 1e-2, Horizon{0.0, 2.0}, RngStream{3, 3});
    CHECK(sim.truncation_bias == doctest::Approx(2.0 * nu.small_jump_mean_abs(1e-2)));
}

TEST_CASE("jump magnitudes respect the truncation and the cap") {
    LevyMeasure nu = LevyMeasure::stable_like(2.0, 1.0, 0.7, 0.8, 0.0, 0.05);
    JumpPath p = simulate_bv_levy(nu, 1e-3, Horizon{0.0, 1.0}, RngStream{11, 0}).path;
    REQUIRE(p.jump_count() > 0);
    for (double s : p.sizes()) {
        CHECK(std::abs(s) >= 1e-3);
        CHECK(std::abs(s) <= 0.8);
        if (s < 0.0)
            CHECK(-s >= 0.05);   // the negative side's floor
    }
}

TEST_CASE("empirical jump-size split follows the side weights") {
    // c+ = 3, c- = 1 with a common floor: share of positive jumps is 3/4
    LevyMeasure nu = LevyMeasure::stable_like(3.0, 1.0, 0.5, 1.0, 0.1, 0.1);
    RngStream rng{8, 8};
    double pos = 0.0, tot = 0.0;
    for (std::size_t r = 0; r < 200; ++r) {
        JumpPath p = simulate_bv_levy(nu, 1e-3, Horizon{0.0, 1.0}, rng.fork(r)).path;
        for (double s : p.sizes()) {
            tot += 1.0;
            if (s > 0.0)
                pos += 1.0;
        }
    }
    REQUIRE(tot > 500.0);
    CHECK(pos / tot == doctest::Approx(0.75).epsilon(0.08));
}

TEST_CASE("brownian increments scale with the step size") {
    Grid grid{0.0, 1.0 / 4096.0, 4096};
    std::vector<double> sq;
    RngStream rng{2026, 1};
    for (std::size_t r = 0; r < 20; ++r) {
        GridPath w = simulate_brownian(grid, rng.fork(r));
        for (std::size_t k = 1; k <= grid.n; ++k) {
            double d = w.value(k) - w.value(k - 1);
            sq.push_back(d * d / grid.h);
        }
    }
    auto ci = stats::ci95_mean(sq);
    CHECK(ci.contains(1.0));
}

TEST_CASE("unit diffusion coefficients reduce the integrator to brownian motion") {
    Grid grid{0.0, 1.0 / 512.0, 512};
    RngStream rng{99, 4};
    GridPath w = simulate_brownian(grid, rng);
    GridPath x = simulate_ito([](double, double) { return 1.0; },
                              [](double, double) { return 0.0; }, grid, rng);
    for (std::size_t k = 0; k <= grid.n; ++k)
        CHECK(x.value(k) == w.value(k));
}

TEST_CASE("integrator reports the failing node on blowup") {
    Grid grid{0.0, 0.25, 8};
    auto bad = [](double t, double) { return t < 0.6 ? 1.0 : std::nan(""); };
    try {
        simulate_ito(bad, [](double, double) { return 0.0; }, grid, RngStream{1, 1});
        FAIL("expected SimulationFailure");
    } catch (const SimulationFailure& e) {
        CHECK(e.node >= 2);
        CHECK(e.node <= 4);
    }
}

TEST_CASE("half-line regularity estimator separates the designed cases") {
    std::vector<double> ladder{1e-5, 1e-6, 1e-7};
    // positive jumps only: the path leaves zero upward
    LevyMeasure up = LevyMeasure::stable_like(1.0, 0.0, 0.5, 1.0);
    RegularityEstimate ru =
        estimate_half_line_regularity(up, ladder, 150, RngStream{31, 0}, 0.001);
    CHECK(ru.verdict == "likely-downwards");
    // symmetric: no dissymmetry to detect
    LevyMeasure sym = LevyMeasure::stable_like(1.0, 1.0, 0.5, 1.0);
    RegularityEstimate rs =
        estimate_half_line_regularity(sym, ladder, 150, RngStream{31, 1}, 0.001);
    CHECK(rs.verdict == "likely-non-dissymmetric");
    // negative jumps only, mirrored
    LevyMeasure down = LevyMeasure::stable_like(0.0, 1.0, 0.5, 1.0);
    RegularityEstimate rd =
        estimate_half_line_regularity(down, ladder, 150, RngStream{31, 2}, 0.001);
    CHECK(rd.verdict == "likely-upwards");

    CHECK_THROWS_AS(estimate_half_line_regularity(sym, ladder, 50, RngStream{31, 3}, 0.001),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        estimate_half_line_regularity(sym, {1e-2, 1e-2}, 150, RngStream{31, 4}, 0.001),
        std::invalid_argument);
}

TEST_CASE("infinite-rate measures refuse plain compound poisson sampling") {
    LevyMeasure nu = LevyMeasure::stable_like(1.0, 1.0, 0.5, 1.0);
    CHECK_THROWS_AS(simulate_compound_poisson(nu, Horizon{0.0, 1.0}, RngStream{1, 0}),
                    std::invalid_argument);
    // both floors active means finite rate, so it must work
    LevyMeasure fl = LevyMeasure::stable_like(1.0, 1.0, 0.5, 1.0, 0.2, 0.2);
    JumpPath p = simulate_compound_poisson(fl, Horizon{0.0, 1.0}, RngStream{1, 0});
    for (double s : p.sizes())
        CHECK(std::abs(s) >= 0.2);
}
