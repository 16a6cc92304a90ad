#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "levyhull/sticky.hpp"

using namespace levyhull;

TEST_CASE("hand system: three unit masses at 0,1,2 with velocities 0.6,1,0") {
    ClumpSystem sys = init_system({0.0, 1.0, 2.0}, {0.6, 1.0, 0.0});
    std::vector<MergeRecord> log = sys.run_to_completion();
    REQUIRE(log.size() == 2);
    // first collision: middle catches the right one after one time unit at x=2
    CHECK(log[0].time == doctest::Approx(1.0));
    CHECK(log[0].left == 1);
    CHECK(log[0].position == doctest::Approx(2.0));
    CHECK(log[0].mass == doctest::Approx(2.0));
    CHECK(log[0].velocity == doctest::Approx(0.5));
    // then the left one closes the 1.4 gap at 0.1 relative speed
    CHECK(log[1].time == doctest::Approx(15.0));
    CHECK(log[1].position == doctest::Approx(9.0));
    CHECK(log[1].mass == doctest::Approx(3.0));
    CHECK(log[1].velocity == doctest::Approx(1.6 / 3.0));
    REQUIRE(sys.clumps().size() == 1);
    CHECK(sys.total_mass() == doctest::Approx(3.0));
    CHECK(sys.total_momentum() == doctest::Approx(1.6));
}

TEST_CASE("partition oracle on the same hand system") {
    TheoremCheck check = verify_discrete_theorem({0.6, 1.0, 0.0});
    CHECK(check.agree);
    CHECK(check.events == 2);
    REQUIRE(check.predicted.size() == 1);
    CHECK(check.predicted[0].first == 0);
    CHECK(check.predicted[0].second == 2);
    CHECK(check.conservation_error <= 1e-12);
}

TEST_CASE("ordered velocities never collide") {
    TheoremCheck check = verify_discrete_theorem({-1.0, 0.0, 2.0, 5.0});
    CHECK(check.agree);
    CHECK(check.events == 0);
    REQUIRE(check.predicted.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(check.predicted[i].first == i);
        CHECK(check.predicted[i].second == i);
    }
}

TEST_CASE("reverse-sorted velocities collapse into one clump") {
    TheoremCheck check = verify_discrete_theorem({3.0, 2.0, 1.0, 0.0, -1.0});
    CHECK(check.agree);
    CHECK(check.events == 4);
    REQUIRE(check.predicted.size() == 1);
    CHECK(check.predicted[0].second == 4);
}

TEST_CASE("single particle is already final") {
    TheoremCheck check = verify_discrete_theorem({1.7});
    CHECK(check.agree);
    CHECK(check.events == 0);
}

TEST_CASE("collision ties resolve to the smallest left index") {
    // two identical closing pairs; both collide at t = 0.5
    ClumpSystem sys({0.0, 1.0, 10.0, 11.0}, {1.0, -1.0, 1.0, -1.0});
    auto ev = sys.next_collision();
    REQUIRE(ev.has_value());
    CHECK(ev->left == 0);
    CHECK(ev->time == doctest::Approx(0.5));
}

TEST_CASE("merging a stale event is rejected") {
    ClumpSystem sys({0.0, 1.0, 2.0}, {1.0, 0.0, -1.0});
    auto ev = sys.next_collision();
    REQUIRE(ev.has_value());
    CollisionEvent stale = *ev;
    stale.time *= 0.5;
    CHECK_THROWS_AS(sys.merge(stale), std::invalid_argument);
    sys.merge(*ev);
    CHECK(sys.clumps().size() == 2);
}

TEST_CASE("system construction validates input") {
    CHECK_THROWS_AS(ClumpSystem({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(ClumpSystem({0.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(ClumpSystem({1.0, 0.0}, {1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(ClumpSystem({0.0, 1.0}, {1.0}), std::invalid_argument);
    CHECK_THROWS_AS(ClumpSystem({0.0, 1.0}, {1.0, 2.0}, {1.0, -1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_discrete_theorem({}), std::invalid_argument);
    // all-equal velocities make the envelope degenerate on purpose
    CHECK_THROWS_AS(verify_discrete_theorem({1.0, 1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("conservation holds across random systems") {
    std::mt19937_64 eng(2468);
    std::normal_distribution<double> z;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + eng() % 9;
        std::vector<double> v(n);
        for (auto& x : v)
            x = z(eng);
        TheoremCheck check = verify_discrete_theorem(v);
        CHECK(check.agree);
        CHECK(check.conservation_error <= 1e-12);
        // each event merges exactly two clumps
        CHECK(check.events == n - check.predicted.size());
        CHECK(check.events <= n - 1);
    }
}
