#ifndef TAILGAUGE_OUTLIER_STATS_HPP
#define TAILGAUGE_OUTLIER_STATS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "tailgauge/distribution.hpp"
#include "tailgauge/rng.hpp"

namespace tailgauge {

enum class EstimateMode { empirical_plug_in, exact, monte_carlo };

struct OutlierEstimate {
    double kappa = 0.0;
    std::size_t n = 0;       // sample size behind the estimate; 0 for exact
    double estimate = 0.0;
    double std_error = 0.0;
    std::size_t flagged = 0;
    EstimateMode mode = EstimateMode::exact;
};

struct BetaVerdict {
    double observation = 0.0;
    double exceedance_prob = 0.0;
    double beta = 0.0;
    bool is_beta_outlier = false;
};

struct OstensibilityReport {
    std::size_t n = 0;
    double kappa = 0.0;
    double pike_mass = 0.0;    // fraction of data within 0.5 s_n of the mean
    double outlier_rate = 0.0; // empirical p_n at kappa
    double hill_index = 0.0;   // Hill tail index at k = ceil(sqrt(n))
    std::size_t hill_k = 0;
    bool ostensible_heavy_tails = false;
};

// Heuristic gates behind the ostensible-heavy-tails label; declared in one
// place and deliberately excluded from any exact guarantees.
struct OstensibilityThresholds {
    static constexpr double pike_halfwidth_sds = 0.5;
    static constexpr double pike_mass_min = 0.6;
    static constexpr double gauss_bound_fraction = 0.25; // rate gate: (4/9k^2) * this
    static constexpr double hill_index_min = 2.0;
};

/// Fraction of observations with |x_j - mean| / s_n >= kappa, where s_n uses
/// the 1/n plug-in normalizer. Binomial standard error. Throws
/// DegenerateSampleError when s_n = 0 and SpecError for n < 2.
OutlierEstimate empirical_pn(std::span<const double> data, double kappa);

/// Exact p(kappa; X) = P{|X - EX| >= kappa sigma_X}. Boundary atoms count:
/// the comparison convention is ">=" throughout. Requires finite variance
/// and an available cdf.
OutlierEstimate exact_outlier_prob(const DistributionSpec& spec, double kappa);

/// Plug-in estimate from n fresh draws (n >= 100).
OutlierEstimate mc_outlier_prob(const DistributionSpec& spec, double kappa, std::size_t n,
                                RngState& rng);

/// Positions, in input order, of the observations empirical_pn would flag.
std::vector<std::size_t> flag_outliers(std::span<const double> data, double kappa);

/// Two-sided exceedance test: flags x when P{|X - EX| >= |x - EX|} <= beta.
/// Observations outside the support get exceedance 0 (impossible under the
/// model, hence an outlier for any beta).
BetaVerdict beta_outlier_test(const DistributionSpec& spec, double x, double beta);

/// Hill estimator of the tail index from the top k_order order statistics of
/// |data|. Requires 5 <= k_order < n/2 and enough nonzero magnitudes.
double hill_tail_index(std::span<const double> data, std::size_t k_order);

OstensibilityReport ostensibility_report(std::span<const double> data, double kappa);

} // namespace tailgauge

#endif
