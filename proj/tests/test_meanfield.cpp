#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "efd/meanfield.hpp"

using namespace efd;

TEST_CASE("supermarket fixed point matches the closed form") {
    CHECK(supermarket_tail(0.9, 2, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(supermarket_tail(0.9, 2, 1) == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(supermarket_tail(0.9, 2, 2) == doctest::Approx(0.729).epsilon(1e-12));
    CHECK(supermarket_tail(0.9, 2, 3) == doctest::Approx(0.4782969).epsilon(1e-12));
    CHECK(supermarket_tail(0.5, 2, 2) == doctest::Approx(0.125).epsilon(1e-12));

    // d = 1 degenerates to the geometric tail
    CHECK(supermarket_tail(0.5, 1, 3) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(supermarket_tail(0.9, 1, 4) == doctest::Approx(std::pow(0.9, 4)).epsilon(1e-12));
}

TEST_CASE("supermarket tail rejects degenerate loads") {
    CHECK_THROWS_AS(supermarket_tail(0.0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(supermarket_tail(1.0, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(supermarket_tail(-0.5, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(supermarket_tail(0.5, 0, 1), std::invalid_argument);
}

TEST_CASE("supermarket tail decreases in k, increases in rho, ratio 1/rho at d=1") {
    for (double rho : {0.3, 0.6, 0.9}) {
        for (uint32_t k = 0; k < 6; ++k) {
            CHECK(supermarket_tail(rho, 2, k + 1) < supermarket_tail(rho, 2, k));
            CHECK(supermarket_tail(rho, 1, k) / supermarket_tail(rho, 1, k + 1) ==
                  doctest::Approx(1.0 / rho).epsilon(1e-12));
        }
    }
    for (uint32_t k = 1; k < 6; ++k)
        CHECK(supermarket_tail(0.4, 2, k) < supermarket_tail(0.8, 2, k));
}

TEST_CASE("drift fills the first tail from an empty profile") {
    MeanFieldState state = MeanFieldState::zeros(5);
    drift_step_inplace(state, 2, 0.01);
    CHECK(state.tails[0] == doctest::Approx(0.01).epsilon(1e-15));
    for (size_t k = 1; k < 5; ++k) CHECK(state.tails[k] == 0.0);
}

TEST_CASE("a full first tail receives no drift") {
    MeanFieldState state = MeanFieldState::zeros(3);
    state.tails[0] = 1.0;
    MeanFieldState next = drift_step(state, 2, 0.01);
    CHECK(next.tails[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("drift advances all components from the pre-step profile") {
    MeanFieldState state{{0.5, 0.2}};
    MeanFieldState next = drift_step(state, 2, 0.01);
    CHECK(next.tails[0] == doctest::Approx(0.5 + 0.01 * (1.0 - 0.25)).epsilon(1e-15));
    CHECK(next.tails[1] == doctest::Approx(0.2 + 0.01 * (0.25 - 0.04)).epsilon(1e-15));
}

TEST_CASE("drift and shift preserve tail monotonicity") {
    std::mt19937_64 rng(13);
    auto uniform = [&rng] { return static_cast<double>(rng()) / 18446744073709551616.0; };
    for (int trial = 0; trial < 200; ++trial) {
        MeanFieldState state = MeanFieldState::zeros(8);
        double level = 1.0;
        for (double& t : state.tails) t = level *= uniform();
        REQUIRE(state.monotone());

        for (uint32_t d : {1u, 2u, 3u}) {
            CHECK(drift_step(state, d, 0.01).monotone());
        }
        CHECK(refresh_shift(state).monotone());
    }
}

TEST_CASE("refresh shift drops the tails one level") {
    MeanFieldState state{{0.5, 0.2, 0.05}};
    MeanFieldState next = refresh_shift(state);
    CHECK(next.tails == std::vector<double>{0.2, 0.05, 0.0});

    MeanFieldState zeros = MeanFieldState::zeros(3);
    CHECK(refresh_shift(zeros).tails == std::vector<double>{0.0, 0.0, 0.0});

    MeanFieldState height_one{{0.5, 0.0, 0.0}};
    CHECK(refresh_shift(height_one).tails == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("the d=1 cycle settles with the first tail pinned at r") {
    CycleResult result = cycle_to_fixed_point(1, 0.5, 20, 1e-3, 1e-8, 10000);
    CHECK(result.wbar.tail(1) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(result.wbar.monotone());
    CHECK(result.period > 0.0);
}

TEST_CASE("the d=2 cycle converges to a rapidly decaying profile") {
    CycleResult result = cycle_to_fixed_point(2, 0.5, 20, 1e-3, 1e-8, 10000);
    const MeanFieldState& w = result.wbar;
    CHECK(w.tail(1) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(w.monotone());
    CHECK(w.tail(2) < 0.2);
    CHECK(w.tail(5) < 1e-4);

    // doubly-exponential signature: log-convex decay beyond the first tail,
    // up to truncation noise
    for (uint32_t k = 2; k + 1 <= w.kmax() && w.tail(k + 1) > 1e-14; ++k)
        CHECK(w.tail(k + 1) <= w.tail(k) * w.tail(k) / w.tail(k - 1) * 1.1);
}

TEST_CASE("longer filling precedes refreshes at higher triggers") {
    CycleResult low = cycle_to_fixed_point(2, 0.3, 20);
    CycleResult high = cycle_to_fixed_point(2, 0.9, 20);
    CHECK(high.period > low.period);
}

TEST_CASE("cycles settle across the whole d and r grid") {
    for (uint32_t d : {1u, 2u}) {
        for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            CycleResult result = cycle_to_fixed_point(d, r, 30, 1e-3, 1e-8, 10000);
            CHECK(result.wbar.tail(1) == doctest::Approx(r).epsilon(1e-9));
            CHECK(result.wbar.monotone());
            // mass balance: the drift feeds mass at unit rate and a refresh
            // removes exactly the nonnull fraction r, so the settled filling
            // time equals r up to the mass leaking past kmax (visible for
            // d = 1, where the tails only decay geometrically)
            CHECK(result.period == doctest::Approx(r).epsilon(d == 1 ? 1e-3 : 1e-6));
        }
    }
}

TEST_CASE("halving dt refines the fixed point at first order") {
    CycleResult coarse = cycle_to_fixed_point(2, 0.5, 20, 4e-3, 1e-10, 10000);
    CycleResult mid = cycle_to_fixed_point(2, 0.5, 20, 2e-3, 1e-10, 10000);
    CycleResult fine = cycle_to_fixed_point(2, 0.5, 20, 1e-3, 1e-10, 10000);

    double first = coarse.wbar.sup_distance(mid.wbar);
    double second = mid.wbar.sup_distance(fine.wbar);
    CHECK(second < 2.0 * first);
}

TEST_CASE("running out of cycles raises an error carrying both profiles") {
    try {
        cycle_to_fixed_point(2, 0.5, 20, 1e-3, 1e-8, 1);
        REQUIRE(false);
    } catch (const ConvergenceError& e) {
        CHECK(e.previous_state.kmax() == 20);
        CHECK(e.last_state.kmax() == 20);
        CHECK(e.last_state.sup_distance(e.previous_state) >= 1e-8);
    }
}

TEST_CASE("cycle parameters are validated") {
    CHECK_THROWS_AS(cycle_to_fixed_point(2, 0.0, 20), std::invalid_argument);
    CHECK_THROWS_AS(cycle_to_fixed_point(2, 1.0, 20), std::invalid_argument);
    CHECK_THROWS_AS(cycle_to_fixed_point(0, 0.5, 20), std::invalid_argument);
    CHECK_THROWS_AS(cycle_to_fixed_point(2, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(cycle_to_fixed_point(2, 0.5, 20, 0.0), std::invalid_argument);
}

TEST_CASE("false positive bound reads the tails of wbar") {
    MeanFieldState w{{0.5, 0.1, 0.01, 0.0, 0.0}};
    CHECK(false_positive_bound(w, 2) == doctest::Approx(0.01));
    CHECK(detection_tail(w, 2) == doctest::Approx(0.1));
    CHECK(false_positive_bound(w, 3) == 0.0);  // empty tail beyond k = 3
    CHECK(false_positive_bound(w, 0) == doctest::Approx(0.5));
    CHECK_THROWS_AS(false_positive_bound(w, 5), std::invalid_argument);

    // at C = 0 the bound is the trigger proportion itself
    CycleResult result = cycle_to_fixed_point(2, 0.4, 10);
    CHECK(false_positive_bound(result.wbar, 0) == doctest::Approx(0.4).epsilon(1e-9));
}
