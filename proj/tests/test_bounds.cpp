#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tailgauge/bounds.hpp"
#include "tailgauge/errors.hpp"
#include "tailgauge/experiments.hpp"
#include "tailgauge/outlier_stats.hpp"

using namespace tailgauge;

TEST_SUITE("bounds") {

TEST_CASE("selberg level bound") {
    CHECK(selberg_bound(5.0) == 0.04);
    CHECK(selberg_bound(2.0) == 0.25);
    CHECK_THROWS_AS(selberg_bound(1.0), SpecError);
    CHECK_THROWS_AS(selberg_bound(0.5), SpecError);
}

TEST_CASE("gauss unimodal bound and its applicability edge") {
    CHECK(gauss_bound(5.0) == doctest::Approx(4.0 / 225.0).epsilon(1e-15));
    CHECK(gauss_bound(kGaussBoundMinKappa + 1e-9) == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
    CHECK_THROWS_AS(gauss_bound(1.0), SpecError);
    CHECK_THROWS_AS(gauss_bound(kGaussBoundMinKappa), SpecError);
}

TEST_CASE("example 1 law attains the selberg level exactly") {
    for (double kappa : {1.5, 2.0, 5.0, 10.0}) {
        CAPTURE(kappa);
        const double p = 1.0 / (kappa * kappa);
        CHECK(exact_outlier_prob(example1_spec(p), kappa).estimate == selberg_bound(kappa));
    }
    CHECK_THROWS_AS(example1_spec(1.0), SpecError);
    CHECK_THROWS_AS(example1_spec(0.0), SpecError);
}

TEST_CASE("example 2 probability formula with clamping") {
    CHECK(example2_prob(4.0 / 75.0, 5.0) == doctest::Approx(4.0 / 225.0).epsilon(1e-14));
    CHECK(example2_prob(0.12, 1.0) == doctest::Approx(0.096).epsilon(1e-14));
    CHECK(example2_prob(0.9, 5.0) == 0.0); // 5 sqrt(0.3) > 1
    CHECK_THROWS_AS(example2_prob(0.0, 5.0), SpecError);
    CHECK_THROWS_AS(example2_prob(1.5, 5.0), SpecError);
}

TEST_CASE("example 2 maximizer, with a brute-force grid oracle") {
    const Example2Max at5 = example2_maximizer(5.0);
    CHECK(at5.p_star == doctest::Approx(4.0 / 75.0).epsilon(1e-15));
    CHECK(at5.value == doctest::Approx(4.0 / 225.0).epsilon(1e-15));
    const Example2Max at2 = example2_maximizer(2.0);
    CHECK(at2.p_star == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(at2.value == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
    CHECK_THROWS_AS(example2_maximizer(1.0), SpecError);

    double best_p = 0.0, best_v = -1.0;
    for (int i = 1; i <= 1000; ++i) {
        const double p = static_cast<double>(i) * 0.001;
        const double v = example2_prob(p, 5.0);
        if (v > best_v) {
            best_v = v;
            best_p = p;
        }
    }
    CHECK(std::abs(best_p - at5.p_star) <= 0.001);
    CHECK(std::abs(best_v - at5.value) <= 1e-6);
}

TEST_CASE("spike-uniform law attains the gauss bound") {
    for (double kappa : {1.2, 2.0, 5.0}) {
        CAPTURE(kappa);
        const double p_star = 4.0 / (3.0 * kappa * kappa);
        const double attained = exact_outlier_prob(example2_spec(p_star), kappa).estimate;
        CHECK(std::abs(attained - gauss_bound(kappa)) <= 1e-12);
    }
}

TEST_CASE("gauss bound is 4/9 of the selberg bound") {
    for (double kappa : {1.2, 1.5, 2.0, 3.0, 5.0, 7.5, 10.0}) {
        CHECK(gauss_bound(kappa) ==
              doctest::Approx((4.0 / 9.0) * selberg_bound(kappa)).epsilon(1e-15));
    }
}

TEST_CASE("unimodal symmetric corpus sits below the gauss bound at kappa = 5") {
    const std::vector<std::pair<const char*, DistributionSpec>> corpus = {
        {"fig1", fig1_mixture()},
        {"fig2", fig2_mixture()},
        {"spike(0.12)", example2_spec(0.12)},
        {"spike(4/75)", example2_spec(4.0 / 75.0)}, // the extremal case: equality
        {"normal", DistributionSpec::normal(0, 1)},
        {"normal(0,0.2)", DistributionSpec::normal(0, 0.2)},
        {"uniform", DistributionSpec::uniform(-1, 1)},
        {"trunc_normal", DistributionSpec::truncated(DistributionSpec::normal(0, 1), 4.0)},
        {"normal_mix", DistributionSpec::mixture({{0.5, DistributionSpec::normal(0, 1)},
                                                  {0.5, DistributionSpec::normal(0, 0.5)}})},
    };
    for (const auto& [name, spec] : corpus) {
        CAPTURE(name);
        CHECK(exact_outlier_prob(spec, 5.0).estimate <= gauss_bound(5.0) + 1e-15);
    }
}

TEST_CASE("bound report assembles the applicable pieces") {
    const BoundReport r5 = bound_report(5.0);
    CHECK(r5.chebyshev_selberg == 0.04);
    CHECK(r5.gauss.has_value());
    CHECK(*r5.gauss == doctest::Approx(4.0 / 225.0).epsilon(1e-15));
    CHECK(r5.extremal_three_point_p == 0.04);
    CHECK(*r5.extremal_spike_uniform_p == doctest::Approx(4.0 / 75.0).epsilon(1e-15));
    CHECK(*r5.gauss <= r5.chebyshev_selberg);

    const BoundReport r11 = bound_report(1.1); // below 2/sqrt(3)
    CHECK_FALSE(r11.gauss.has_value());
    CHECK_FALSE(r11.extremal_spike_uniform_p.has_value());
    CHECK_THROWS_AS(bound_report(1.0), SpecError);
}

} // TEST_SUITE
