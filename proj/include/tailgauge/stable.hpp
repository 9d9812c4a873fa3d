#ifndef TAILGAUGE_STABLE_HPP
#define TAILGAUGE_STABLE_HPP

#include <cstddef>
#include <vector>

#include "tailgauge/rng.hpp"

namespace tailgauge {

enum class StableSkew { symmetric, one_sided_positive };

// Strictly stable law, restricted to the two variants the experiments need:
// symmetric for any alpha in (0,2), totally skewed positive for alpha < 1.
// General (alpha, beta, scale, shift) parameterizations are out of scope.
struct StableParams {
    double alpha = 1.0;
    StableSkew skew = StableSkew::symmetric;
};

void validate(const StableParams& params);

/// One strictly stable variate via the Chambers-Mallows-Stuck transform.
/// Symmetric case: X = sin(aU)/cos(U)^{1/a} * (cos((1-a)U)/E)^{(1-a)/a}
/// with U uniform on (-pi/2, pi/2) and E unit exponential; |alpha-1| < 1e-10
/// takes the exact tan(U) Cauchy path (the CMS formula is unstable there).
/// One-sided case: Kanter's totally skewed transform, support (0, inf).
double sample_stable_one(const StableParams& params, RngState& rng);

std::vector<double> sample_stable(const StableParams& params, std::size_t n, RngState& rng);

/// Log-log slope of the median 1/n-normalized empirical variance of
/// symmetric alpha-stable samples against the sample size. For alpha < 1
/// the variance grows like n^{2/alpha - 1}, so the slope estimates that
/// exponent. sizes must be strictly increasing with >= 3 entries; the
/// median at each size is taken over `reps` replications (>= 50), each on
/// its own substream.
double variance_growth_exponent(double alpha, const std::vector<std::size_t>& sizes,
                                std::size_t reps, const RngState& rng);

} // namespace tailgauge

#endif
