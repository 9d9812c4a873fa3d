#include <cmath>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tailgauge/bounds.hpp"
#include "tailgauge/distribution.hpp"
#include "tailgauge/errors.hpp"
#include "tailgauge/experiments.hpp"
#include "tailgauge/summary_stats.hpp"

using namespace tailgauge;

namespace {

DistributionSpec three_point_law() {
    // {-1: 0.02, 0: 0.96, 1: 0.02}
    return example1_spec(0.04);
}

} // namespace

TEST_SUITE("distribution") {

TEST_CASE("closed-form moments match the worked examples") {
    const MomentSummary tp = moments(three_point_law());
    CHECK(tp.mean == 0.0);
    CHECK(tp.sd == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(tp.support_lo == -1.0);
    CHECK(tp.support_hi == 1.0);

    const MomentSummary spike = moments(example2_spec(0.12));
    CHECK(spike.mean == 0.0);
    CHECK(spike.variance == doctest::Approx(0.04).epsilon(1e-14));

    const MomentSummary fig1 = moments(fig1_mixture());
    CHECK(fig1.variance == doctest::Approx(4.71 / 225.0).epsilon(1e-14));

    const MomentSummary std_normal = moments(DistributionSpec::normal(0, 1));
    CHECK(std_normal.mean == 0.0);
    CHECK(std_normal.variance == 1.0);
    CHECK(std_normal.finite_variance);
}

TEST_CASE("heavy-tailed variants report infinite variance") {
    const MomentSummary st = moments(DistributionSpec::stable(1.5, StableSkew::symmetric));
    CHECK_FALSE(st.finite_variance);
    CHECK(std::isinf(st.variance));
    CHECK(st.mean == 0.0); // symmetry center, alpha > 1

    const MomentSummary cauchy = moments(DistributionSpec::stable(1.0, StableSkew::symmetric));
    CHECK(std::isnan(cauchy.mean));

    const MomentSummary one_sided =
        moments(DistributionSpec::stable(0.5, StableSkew::one_sided_positive));
    CHECK(one_sided.support_lo == 0.0);
    CHECK(std::isinf(one_sided.mean));

    const MomentSummary quot = moments(DistributionSpec::pareto_scale_quotient(3.0));
    CHECK_FALSE(quot.finite_variance);
    CHECK(std::isinf(quot.variance));
    CHECK(std::isnan(quot.mean)); // index-1 tails: no mean either
}

TEST_CASE("mixture variance satisfies the law of total variance") {
    RngState rng(90210);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<double, DistributionSpec>> comps;
        std::vector<double> ws;
        const int k = 2 + static_cast<int>(rng.uniform_index(3));
        double total = 0.0;
        for (int i = 0; i < k; ++i) {
            const double w = rng.uniform01();
            ws.push_back(w);
            total += w;
        }
        std::vector<MomentSummary> parts;
        for (int i = 0; i < k; ++i) {
            const double w = ws[i] / total;
            DistributionSpec d = DistributionSpec::atom(0);
            switch (rng.uniform_index(3)) {
                case 0: d = DistributionSpec::atom(rng.normal()); break;
                case 1: {
                    const double lo = rng.normal();
                    d = DistributionSpec::uniform(lo, lo + 0.1 + rng.uniform01());
                    break;
                }
                default: d = DistributionSpec::normal(rng.normal(), 0.1 + rng.uniform01());
            }
            parts.push_back(moments(d));
            comps.emplace_back(w, std::move(d));
        }
        double mixture_mean = 0.0, second = 0.0;
        for (int i = 0; i < k; ++i) {
            const double w = ws[i] / total;
            mixture_mean += w * parts[i].mean;
            second += w * (parts[i].variance + parts[i].mean * parts[i].mean);
        }
        const double expected_var = second - mixture_mean * mixture_mean;
        const MomentSummary got = moments(DistributionSpec::mixture(std::move(comps)));
        CHECK(got.mean == doctest::Approx(mixture_mean).epsilon(1e-12));
        CHECK(got.variance == doctest::Approx(expected_var).epsilon(1e-12));
    }
}

TEST_CASE("cdf and tails: worked examples") {
    CHECK(cdf(DistributionSpec::normal(0, 1), 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cdf(DistributionSpec::uniform(-1, 1), 0.5) == doctest::Approx(0.75).epsilon(1e-15));
    // Upper tail of the uniform mixture just above 5 sigma.
    const double expected = (4.0 / 75.0) * (1.0 - 0.723418) / 2.0;
    CHECK(upper_tail(fig1_mixture(), 0.723418) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.0073755).epsilon(1e-4));

    // Cauchy is the one stable law with a closed cdf.
    CHECK(cdf(DistributionSpec::stable(1.0, StableSkew::symmetric), 1.0) ==
          doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(cdf(DistributionSpec::stable(1.5, StableSkew::symmetric), 0.0),
                    UnsupportedSpecError);
    CHECK_FALSE(has_cdf(DistributionSpec::stable(1.5, StableSkew::symmetric)));
    CHECK(has_cdf(DistributionSpec::pareto_scale_quotient(3.0)));
}

TEST_CASE("cdf is nondecreasing with limits 0 and 1, right-continuous at atoms") {
    const std::vector<DistributionSpec> corpus = {
        three_point_law(),
        example2_spec(0.12),
        fig1_mixture(),
        fig2_mixture(),
        DistributionSpec::normal(0.3, 2.0),
        DistributionSpec::uniform(-2, 5),
        DistributionSpec::truncated(DistributionSpec::normal(0, 1), 2.0),
        DistributionSpec::stable(1.0, StableSkew::symmetric),
    };
    for (const auto& spec : corpus) {
        const MomentSummary ms = moments(spec);
        const double lo = std::isfinite(ms.support_lo) ? ms.support_lo - 1.0 : -20.0;
        const double hi = std::isfinite(ms.support_hi) ? ms.support_hi + 1.0 : 20.0;
        double prev = -1.0;
        for (int i = 0; i < 1000; ++i) {
            const double x = lo + (hi - lo) * static_cast<double>(i) / 999.0;
            const double f = cdf(spec, x);
            CHECK(f >= prev - 1e-15);
            CHECK(f >= 0.0);
            CHECK(f <= 1.0);
            prev = f;
        }
        const bool compact = std::isfinite(ms.support_lo) && std::isfinite(ms.support_hi);
        const double far_lo = compact ? lo : -1e8;
        const double far_hi = compact ? hi : 1e8;
        CHECK(cdf(spec, far_lo) <= 1e-6);
        CHECK(cdf(spec, far_hi) >= 1.0 - 1e-6);
    }
    // Right continuity and jump mass at an atom.
    const auto tp = three_point_law();
    CHECK(cdf(tp, 1.0) - cdf(tp, 1.0 - 1e-9) == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(cdf(tp, 1.0 + 1e-9) == cdf(tp, 1.0));
    CHECK(point_mass(tp, 0.0) == doctest::Approx(0.96).epsilon(1e-15));
    const auto trunc = DistributionSpec::truncated(DistributionSpec::normal(0, 1), 2.0);
    CHECK(point_mass(trunc, 0.0) == doctest::Approx(2.0 * oracles::Q(2.0)).epsilon(1e-12));
}

TEST_CASE("sampling: degenerate atom and argument validation") {
    RngState rng(1);
    const auto xs = sample(DistributionSpec::atom(0), 3, rng);
    CHECK(xs == std::vector<double>{0.0, 0.0, 0.0});
    CHECK_THROWS_AS(sample(DistributionSpec::atom(0), 0, rng), SpecError);
}

TEST_CASE("seed determinism and substream independence") {
    const auto spec = fig1_mixture();
    RngState a(99), b(99), c(100);
    CHECK(sample(spec, 50, a) == sample(spec, 50, b));
    RngState a2(99);
    CHECK(sample(spec, 50, a2) != sample(spec, 50, c));
    RngState master(7);
    RngState s0 = master.substream(0), s1 = master.substream(1);
    CHECK(sample(spec, 50, s0) != sample(spec, 50, s1));
    RngState s0_again = master.substream(0);
    RngState s0_ref = RngState(7).substream(0);
    CHECK(sample(spec, 50, s0_again) == sample(spec, 50, s0_ref));
}

TEST_CASE("seeded draws match moments within 4 standard errors at n = 1e6") {
    const std::vector<std::pair<const char*, DistributionSpec>> corpus = {
        {"fig1", fig1_mixture()},
        {"fig2", fig2_mixture()},
        {"three_point", three_point_law()},
        {"spike", example2_spec(0.12)},
        {"normal", DistributionSpec::normal(0, 1)},
        {"uniform", DistributionSpec::uniform(-1, 1)},
        {"truncated", DistributionSpec::truncated(DistributionSpec::normal(0, 1), 4.0)},
    };
    RngState master(424242);
    std::uint64_t idx = 0;
    for (const auto& [name, spec] : corpus) {
        CAPTURE(name);
        RngState sub = master.substream(idx++);
        const auto xs = sample(spec, 1000000, sub);
        const MomentSummary ms = moments(spec);
        const double m = mean_of(xs);
        const double s2 = variance_mle(xs, m);
        double m4 = 0.0;
        for (double x : xs) {
            const double d = x - m;
            m4 += d * d * d * d;
        }
        m4 /= static_cast<double>(xs.size());
        const double se_mean = ms.sd / 1000.0;
        const double se_var = std::sqrt((m4 - s2 * s2) / 1e6);
        CHECK(std::abs(m - ms.mean) <= 4.0 * se_mean);
        CHECK(std::abs(s2 - ms.variance) <= 4.0 * se_var);
    }
}

TEST_CASE("quotient sampler is centered at zero") {
    RngState rng(11);
    auto xs = sample(DistributionSpec::pareto_scale_quotient(3.0), 100000, rng);
    CHECK(std::abs(median_of(std::move(xs))) < 0.02);
}

TEST_CASE("truncate: normal tail example and error paths") {
    const auto trunc = truncate(DistributionSpec::normal(0, 1), 2.0, 4.0);
    // Oracle: Var X* = 1 - 2 (A phi(A) + Q(A)) at A = 4.
    const double oracle = 1.0 - 2.0 * (4.0 * oracles::phi(4.0) + oracles::Q(4.0));
    CHECK(moments(trunc).variance == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(oracle == doctest::Approx(0.998866).epsilon(1e-6));

    // Threshold beyond a compact support changes nothing.
    const auto same = truncate(DistributionSpec::uniform(-1, 1), 1.5, 2.0);
    CHECK(moments(same).variance == moments(DistributionSpec::uniform(-1, 1)).variance);

    CHECK_THROWS_AS(truncate(DistributionSpec::normal(0, 1), 2.0, 1.0), SpecError);
    CHECK_THROWS_AS(truncate(DistributionSpec::stable(1.5, StableSkew::symmetric), 2.0, 10.0),
                    UnsupportedSpecError);
    CHECK_THROWS_AS(truncate(DistributionSpec::normal(1, 1), 2.0, 10.0), SpecError);
    CHECK(default_truncation_threshold(DistributionSpec::normal(0, 1), 2.0) == 4.0);
}

TEST_CASE("truncate shrinks the variance and confines the support") {
    const auto base = fig1_mixture();
    const auto trunc = truncate(base, 5.0, 0.9);
    const MomentSummary mt = moments(trunc);
    CHECK(mt.variance < moments(base).variance);
    CHECK(mt.variance == doctest::Approx(0.0161155555555).epsilon(1e-10));
    CHECK(mt.support_lo >= -0.9);
    CHECK(mt.support_hi <= 0.9);
    RngState rng(5);
    for (double x : sample(trunc, 20000, rng)) {
        CHECK(std::abs(x) <= 0.9);
        if (std::abs(x) >= 0.9) CHECK(x == 0.0);
    }
}

TEST_CASE("spec validation rejects malformed parameters") {
    CHECK_THROWS_AS(DistributionSpec::uniform(1, 1), SpecError);
    CHECK_THROWS_AS(DistributionSpec::uniform(2, -1), SpecError);
    CHECK_THROWS_AS(DistributionSpec::normal(0, 0), SpecError);
    CHECK_THROWS_AS(DistributionSpec::mixture({{0.5, DistributionSpec::atom(0)},
                                               {0.6, DistributionSpec::atom(1)}}),
                    SpecError);
    CHECK_THROWS_AS(DistributionSpec::mixture({{1.2, DistributionSpec::atom(0)}}), SpecError);
    CHECK_THROWS_AS(DistributionSpec::stable(2.0, StableSkew::symmetric), SpecError);
    CHECK_THROWS_AS(DistributionSpec::stable(1.5, StableSkew::one_sided_positive), SpecError);
    CHECK_THROWS_AS(DistributionSpec::pareto_scale_quotient(2.0), SpecError);
    CHECK_THROWS_AS(DistributionSpec::truncated(DistributionSpec::normal(0, 1), 0.0), SpecError);
    // Mixture weights must live on the components, not inside atoms.
    CHECK_THROWS_AS(DistributionSpec::mixture_of_atoms({{0.0, 0.5}, {1.0, 0.6}}), SpecError);
}

TEST_CASE("symmetry detection") {
    CHECK(is_symmetric_about_zero(three_point_law()));
    CHECK(is_symmetric_about_zero(fig1_mixture()));
    CHECK(is_symmetric_about_zero(fig2_mixture()));
    CHECK(is_symmetric_about_zero(DistributionSpec::normal(0, 2)));
    CHECK(is_symmetric_about_zero(DistributionSpec::stable(1.5, StableSkew::symmetric)));
    CHECK(is_symmetric_about_zero(DistributionSpec::pareto_scale_quotient(3.0)));
    CHECK_FALSE(is_symmetric_about_zero(DistributionSpec::normal(1, 1)));
    CHECK_FALSE(is_symmetric_about_zero(DistributionSpec::uniform(-1, 2)));
    CHECK_FALSE(is_symmetric_about_zero(DistributionSpec::stable(0.5, StableSkew::one_sided_positive)));
    CHECK_FALSE(is_symmetric_about_zero(
        DistributionSpec::mixture({{0.5, DistributionSpec::atom(-1)},
                                   {0.5, DistributionSpec::atom(2)}})));
}

TEST_CASE("json round trip preserves structure, rational weights parse exactly") {
    const std::vector<DistributionSpec> corpus = {
        three_point_law(),
        fig1_mixture(),
        fig2_mixture(),
        DistributionSpec::normal(0.5, 2.0),
        DistributionSpec::stable(0.8, StableSkew::one_sided_positive),
        DistributionSpec::pareto_scale_quotient(4.0),
        DistributionSpec::truncated(fig1_mixture(), 0.9),
    };
    for (const auto& spec : corpus) {
        const DistributionSpec back = spec_from_json(to_json(spec));
        CHECK(spec_equal(spec, back));
    }

    const auto parsed = spec_from_json(nlohmann::json::parse(R"({
        "type": "mixture",
        "components": [
            {"weight": "71/75", "dist": {"type": "uniform", "lo": -0.1, "hi": 0.1}},
            {"weight": "4/75",  "dist": {"type": "uniform", "lo": -1,   "hi": 1}}
        ]})"));
    CHECK(spec_equal(parsed, fig1_mixture()));

    // Weighted atoms stand for their own mixture components.
    const auto shorthand = spec_from_json(nlohmann::json::parse(R"({
        "type": "mixture",
        "components": [
            {"type": "atom", "value": -1, "weight": 0.02},
            {"type": "atom", "value": 0,  "weight": "0.96"},
            {"type": "atom", "value": 1,  "weight": "1/50"}
        ]})"));
    CHECK(spec_equal(shorthand, three_point_law()));

    CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"type":"wiggly"})")), SpecError);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(R"({"type":"uniform","lo":0})")),
                    SpecError);
    CHECK_THROWS_AS(spec_from_json(nlohmann::json::parse(
                        R"({"type":"atom","value":0,"weight":0.5})")),
                    SpecError);
    CHECK_THROWS_AS(load_spec("/nonexistent/spec.json"), SpecError);
}

} // TEST_SUITE
