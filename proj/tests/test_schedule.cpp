#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "laf/errors.hpp"
#include "laf/schedule.hpp"

using namespace laf;

TEST_CASE("default 1000-step schedule matches the frozen products") {
    auto sched = default_schedule();
    CHECK(sched.training_steps == 1000);
    CHECK(sched.alpha_bar.size() == 1001);
    CHECK(sched.alpha_bar_at(0) == 1.0);
    // cumulative products, computed once with an independent script
    CHECK(sched.alpha_bar_at(1) == doctest::Approx(0.9999).epsilon(1e-12));
    CHECK(sched.alpha_bar_at(20) ==
          doctest::Approx(0.9942309516861578).epsilon(1e-12));
    CHECK(sched.alpha_bar_at(600) ==
          doctest::Approx(0.025879389423334884).epsilon(1e-12));
    CHECK(sched.alpha_bar_at(800) ==
          doctest::Approx(0.0015320895496479475).epsilon(1e-12));
    CHECK(sched.alpha_bar_at(1000) ==
          doctest::Approx(4.0358297653756754e-05).epsilon(1e-12));
    // to three significant figures that endpoint is 4.04e-5
    CHECK(sched.alpha_bar_at(1000) == doctest::Approx(4.04e-5).epsilon(5e-3));
}

TEST_CASE("alpha_bar decreases strictly and ends deep in the noise") {
    auto sched = default_schedule();
    for (int t = 1; t <= sched.training_steps; ++t) {
        CHECK(sched.alpha_bar_at(t) < sched.alpha_bar_at(t - 1));
        CHECK(sched.alpha_bar_at(t) > 0.0);
    }
    CHECK(sched.alpha_bar_at(0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(sched.alpha_bar_at(sched.training_steps) < 0.01);
}

TEST_CASE("the 50-step inference grid strides down from 1000 to 20") {
    auto sched = default_schedule(50);
    REQUIRE(sched.inference_grid.size() == 50);
    CHECK(sched.inference_grid.front() == 1000);
    CHECK(sched.inference_grid.back() == 20);
    for (std::size_t i = 0; i + 1 < sched.inference_grid.size(); ++i) {
        CHECK(sched.inference_grid[i] - sched.inference_grid[i + 1] == 20);
    }
}

TEST_CASE("steps equal to T puts every timestep on the grid") {
    auto sched = make_schedule(10, 1e-4, 0.02, 10);
    REQUIRE(sched.inference_grid.size() == 10);
    for (int i = 0; i < 10; ++i) {
        CHECK(sched.inference_grid[i] == 10 - i);
    }
}

TEST_CASE("grid timesteps never include zero") {
    for (int steps : {1, 3, 7, 50, 1000}) {
        auto sched = default_schedule(steps);
        for (int t : sched.inference_grid) CHECK(t >= 1);
        CHECK(sched.inference_grid.front() == 1000);
    }
}

TEST_CASE("snap_to_grid picks the nearest timestep, noisier on ties") {
    auto sched = default_schedule(50); // grid 1000, 980, ..., 20
    CHECK(sched.snap_to_grid(980) == 980);
    CHECK(sched.snap_to_grid(989) == 980);
    CHECK(sched.snap_to_grid(991) == 1000);
    CHECK(sched.snap_to_grid(990) == 1000); // midpoint -> larger t
    CHECK(sched.snap_to_grid(0) == 20);
    CHECK(sched.snap_to_grid(5000) == 1000);
}

TEST_CASE("a one-step training schedule uses beta_start") {
    auto sched = make_schedule(1, 0.1, 0.2, 1);
    CHECK(sched.alpha_bar_at(1) == doctest::Approx(0.9).epsilon(1e-15));
    REQUIRE(sched.inference_grid.size() == 1);
    CHECK(sched.inference_grid[0] == 1);
}

TEST_CASE("invalid parameters are rejected") {
    CHECK_THROWS_AS(make_schedule(0, 1e-4, 0.02, 1), InvalidScheduleParams);
    CHECK_THROWS_AS(make_schedule(1, 0.5, 0.5, 1), InvalidScheduleParams);
    CHECK_THROWS_AS(make_schedule(1000, 0.02, 1e-4, 50),
                    InvalidScheduleParams);
    CHECK_THROWS_AS(make_schedule(1000, 0.0, 0.02, 50), InvalidScheduleParams);
    CHECK_THROWS_AS(make_schedule(1000, 1e-4, 1.0, 50), InvalidScheduleParams);
    CHECK_THROWS_AS(make_schedule(1000, 1e-4, 0.02, 0), InvalidScheduleParams);
    CHECK_THROWS_AS(make_schedule(1000, 1e-4, 0.02, 1001),
                    InvalidScheduleParams);
}

TEST_CASE("alpha_bar_at rejects out-of-range timesteps") {
    auto sched = default_schedule();
    CHECK_THROWS_AS(sched.alpha_bar_at(-1), TimestepOrder);
    CHECK_THROWS_AS(sched.alpha_bar_at(1001), TimestepOrder);
}
