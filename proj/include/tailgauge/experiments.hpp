#ifndef TAILGAUGE_EXPERIMENTS_HPP
#define TAILGAUGE_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tailgauge/distribution.hpp"
#include "tailgauge/quadrature.hpp"

namespace tailgauge {

struct ExperimentRow {
    double x = 0.0;
    double value = 0.0;
    double std_error = 0.0;
};

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t count = 0;
};

// Output of a named, seeded experiment. Everything except runtime_seconds is
// a pure function of (name, parameters, seed); runtime is diagnostic only and
// never serialized into CSV.
struct ExperimentResult {
    std::string name;
    std::uint64_t seed = 0;
    std::vector<ExperimentRow> rows;
    std::vector<HistogramBin> bins; // only histogram-producing experiments
    std::uint64_t n = 0;            // sample size per point (0 when it varies)
    std::uint64_t replications = 0;
    double kappa = 0.0;
    double runtime_seconds = 0.0;
    std::vector<std::pair<std::string, double>> extras; // named scalar outputs
    std::string notes;
};

// Named scalar lookup; throws SpecError when absent.
double extra_value(const ExperimentResult& result, const std::string& key);

// The bundled simulation mixtures: U[-0.1,0.1] with mass 71/75 plus U[-1,1]
// with mass 4/75, and N(0,1) with mass 4/75 plus N(0,0.1) with mass 71/75.
DistributionSpec fig1_mixture();
DistributionSpec fig2_mixture();

/// G(x; alpha) = integral of Phi(a x) q(a; alpha) da over [0, inf), alpha > 2.
/// The upper limit is truncated at a* = (1/abs_tol)^{1/alpha} - 1, where the
/// remaining divisor mass equals abs_tol; that mass re-enters through the
/// limit value of Phi.
double quotient_cdf(double alpha, double x, const QuadratureSettings& settings);

/// Outlier-probability collapse for symmetric alpha-stable samples: one row
/// (n, median over reps of empirical p_n at kappa, bootstrap se) per size.
ExperimentResult run_stable_collapse(double alpha, double kappa, const std::vector<std::size_t>& sizes,
                              std::size_t reps, std::uint64_t seed);

/// n=500 sample from the uniform mixture; rows carry the sample (index,
/// value); extras carry sigma, the fixed +-5 sigma flag count, the empirical
/// flag count, and the exact p(5; X).
ExperimentResult run_fig1(std::uint64_t seed);

/// n=5000 sample from the normal mixture plus a 60-bin histogram of the data
/// scaled by 20; rows carry the sample, bins the histogram.
ExperimentResult run_fig2_fig3(std::uint64_t seed);

/// Quotient-law sweep over alpha: per alpha, reps samples of size n, each
/// reduced by empirical_pn at kappa; rows are (alpha, median fraction,
/// bootstrap se). Uses the per-sample plug-in s_n because the analytic
/// variance of the quotient law diverges; noted in the result metadata.
ExperimentResult run_fig4(const std::vector<double>& alphas, double kappa, std::size_t n,
                          std::size_t reps, std::uint64_t seed);

/// Exact and Monte Carlo p(kappa; X) against the truncated law X*: rows are
/// (0, exact X), (1, exact X*), (2, mc X), (3, mc X*) with n=1e6 draws for
/// the Monte Carlo pair.
ExperimentResult run_truncation_demo(const DistributionSpec& spec, double kappa, double threshold,
                                   std::uint64_t seed);

} // namespace tailgauge

#endif
