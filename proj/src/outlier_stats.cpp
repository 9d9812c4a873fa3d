#include "tailgauge/outlier_stats.hpp"

#include <algorithm>
#include <cmath>

#include "tailgauge/errors.hpp"
#include "tailgauge/summary_stats.hpp"

namespace tailgauge {

namespace {

struct PlugIn {
    double mean;
    double s; // sqrt of the 1/n-normalized variance
};

PlugIn plug_in_stats(std::span<const double> data, double kappa) {
    if (kappa < 0.0) throw SpecError("outlier level kappa must be >= 0");
    if (data.size() < 2) throw SpecError("need at least 2 observations");
    const double m = mean_of(data);
    const double s2 = variance_mle(data, m);
    if (s2 <= 0.0)
        throw DegenerateSampleError("constant sample: s_n = 0, outlier functional undefined");
    return {m, std::sqrt(s2)};
}

double binomial_se(double p, std::size_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

} // namespace

OutlierEstimate empirical_pn(std::span<const double> data, double kappa) {
    const PlugIn st = plug_in_stats(data, kappa);
    std::size_t flagged = 0;
    for (double x : data)
        if (std::abs(x - st.mean) >= kappa * st.s) ++flagged;
    OutlierEstimate est;
    est.kappa = kappa;
    est.n = data.size();
    est.flagged = flagged;
    est.estimate = static_cast<double>(flagged) / static_cast<double>(data.size());
    est.std_error = binomial_se(est.estimate, data.size());
    est.mode = EstimateMode::empirical_plug_in;
    return est;
}

OutlierEstimate exact_outlier_prob(const DistributionSpec& spec, double kappa) {
    if (!(kappa > 0.0)) throw SpecError("exact outlier probability requires kappa > 0");
    const MomentSummary ms = moments(spec);
    if (!ms.finite_variance)
        throw UnsupportedSpecError("exact outlier probability requires finite variance");
    if (ms.sd <= 0.0)
        throw DegenerateSampleError("degenerate law: sigma = 0, outlier functional undefined");
    if (!has_cdf(spec)) throw UnsupportedSpecError("cdf unavailable for this spec");
    // Upper and lower tails evaluated directly so boundary atoms are counted
    // exactly: the three-point extremal law attains the level bound only when
    // boundary atoms count (the ">=" convention).
    const double p =
        upper_tail(spec, ms.mean + kappa * ms.sd) + cdf(spec, ms.mean - kappa * ms.sd);
    OutlierEstimate est;
    est.kappa = kappa;
    est.estimate = std::min(1.0, p);
    est.mode = EstimateMode::exact;
    return est;
}

OutlierEstimate mc_outlier_prob(const DistributionSpec& spec, double kappa, std::size_t n,
                                RngState& rng) {
    if (!(kappa > 0.0)) throw SpecError("outlier level kappa must be > 0");
    if (n < 100) throw SpecError("monte carlo estimate needs n >= 100");
    const std::vector<double> xs = sample(spec, n, rng);
    OutlierEstimate est = empirical_pn(xs, kappa);
    est.mode = EstimateMode::monte_carlo;
    return est;
}

std::vector<std::size_t> flag_outliers(std::span<const double> data, double kappa) {
    const PlugIn st = plug_in_stats(data, kappa);
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < data.size(); ++j)
        if (std::abs(data[j] - st.mean) >= kappa * st.s) idx.push_back(j);
    return idx;
}

BetaVerdict beta_outlier_test(const DistributionSpec& spec, double x, double beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) throw SpecError("beta must lie in [0,1]");
    const MomentSummary ms = moments(spec);
    if (!std::isfinite(ms.mean))
        throw UnsupportedSpecError("beta-outlier test requires a finite mean");
    if (!has_cdf(spec)) throw UnsupportedSpecError("cdf unavailable for this spec");
    const double t = std::abs(x - ms.mean);
    double exceedance = 1.0;
    if (t > 0.0)
        exceedance = std::min(1.0, upper_tail(spec, ms.mean + t) + cdf(spec, ms.mean - t));
    BetaVerdict v;
    v.observation = x;
    v.exceedance_prob = exceedance;
    v.beta = beta;
    v.is_beta_outlier = exceedance <= beta;
    return v;
}

double hill_tail_index(std::span<const double> data, std::size_t k_order) {
    if (k_order < 5) throw SpecError("hill estimator needs k_order >= 5");
    if (2 * k_order >= data.size()) throw SpecError("hill estimator needs k_order < n/2");
    std::vector<double> mags;
    mags.reserve(data.size());
    for (double x : data)
        if (x != 0.0) mags.push_back(std::abs(x));
    if (mags.size() < k_order + 1)
        throw SpecError("insufficient nonzero observations for the hill estimator");
    std::partial_sort(mags.begin(), mags.begin() + static_cast<std::ptrdiff_t>(k_order + 1),
                      mags.end(), std::greater<>());
    const double pivot = mags[k_order];
    double h = 0.0;
    for (std::size_t i = 0; i < k_order; ++i) h += std::log(mags[i] / pivot);
    h /= static_cast<double>(k_order);
    if (h <= 0.0) throw DegenerateSampleError("tied order statistics: hill estimator undefined");
    return 1.0 / h;
}

OstensibilityReport ostensibility_report(std::span<const double> data, double kappa) {
    if (data.size() < 100) throw SpecError("ostensibility report needs n >= 100");
    const OutlierEstimate rate = empirical_pn(data, kappa);
    const double m = mean_of(data);
    const double s = std::sqrt(variance_mle(data, m));
    std::size_t near = 0;
    for (double x : data)
        if (std::abs(x - m) <= OstensibilityThresholds::pike_halfwidth_sds * s) ++near;

    OstensibilityReport rep;
    rep.n = data.size();
    rep.kappa = kappa;
    rep.pike_mass = static_cast<double>(near) / static_cast<double>(data.size());
    rep.outlier_rate = rate.estimate;
    rep.hill_k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(data.size()))));
    rep.hill_index = hill_tail_index(data, rep.hill_k);
    const double rate_gate =
        4.0 / (9.0 * kappa * kappa) * OstensibilityThresholds::gauss_bound_fraction;
    rep.ostensible_heavy_tails = rep.pike_mass > OstensibilityThresholds::pike_mass_min &&
                                 rep.outlier_rate > rate_gate &&
                                 rep.hill_index > OstensibilityThresholds::hill_index_min;
    return rep;
}

} // namespace tailgauge
