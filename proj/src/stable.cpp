#include "tailgauge/stable.hpp"

#include <cmath>

#include "tailgauge/errors.hpp"
#include "tailgauge/summary_stats.hpp"

namespace tailgauge {

namespace {
// CMS is numerically unstable as alpha -> 1; within this band the exact
// Cauchy path tan(U) is used instead.
constexpr double kCauchyBand = 1e-10;
} // namespace

void validate(const StableParams& params) {
    if (!(params.alpha > 0.0 && params.alpha < 2.0))
        throw SpecError("stable index must lie in (0,2)");
    if (params.skew == StableSkew::one_sided_positive && !(params.alpha < 1.0))
        throw SpecError("one-sided positive stable laws require alpha < 1");
}

double sample_stable_one(const StableParams& params, RngState& rng) {
    const double alpha = params.alpha;
    const double u = M_PI * (rng.uniform01() - 0.5); // U ~ Unif(-pi/2, pi/2)
    const double e = -std::log1p(-rng.uniform01()); // E ~ Exp(1), from -log(1-u')

    if (params.skew == StableSkew::symmetric) {
        if (std::abs(alpha - 1.0) < kCauchyBand) return std::tan(u);
        const double s = std::sin(alpha * u) / std::pow(std::cos(u), 1.0 / alpha);
        const double t = std::pow(std::cos((1.0 - alpha) * u) / e, (1.0 - alpha) / alpha);
        return s * t;
    }

    // Totally skewed positive, alpha < 1 (Kanter's form; Laplace transform
    // exp(-s^alpha)). Shift angle pi/2 keeps the variate strictly positive.
    const double shifted = u + M_PI_2;
    const double s = std::sin(alpha * shifted) / std::pow(std::cos(u), 1.0 / alpha);
    const double t = std::pow(std::cos(u - alpha * shifted) / e, (1.0 - alpha) / alpha);
    return s * t;
}

std::vector<double> sample_stable(const StableParams& params, std::size_t n, RngState& rng) {
    validate(params);
    if (n == 0) throw SpecError("sample size must be >= 1");
    std::vector<double> out(n);
    for (double& x : out) x = sample_stable_one(params, rng);
    return out;
}

double variance_growth_exponent(double alpha, const std::vector<std::size_t>& sizes,
                                std::size_t reps, const RngState& rng) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw SpecError("variance growth exponent is stated for alpha in (0,1)");
    if (sizes.size() < 3) throw SpecError("log-log regression needs at least 3 sample sizes");
    for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
        if (sizes[i] >= sizes[i + 1]) throw SpecError("sample sizes must be strictly increasing");
    if (sizes.front() == 0) throw SpecError("sample sizes must be positive");
    if (reps < 50) throw SpecError("need at least 50 replications per size");

    const StableParams params{alpha, StableSkew::symmetric};
    std::vector<double> log_n, log_med;
    log_n.reserve(sizes.size());
    log_med.reserve(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::vector<double> s2(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            RngState sub = rng.substream(i * reps + r);
            std::vector<double> xs(sizes[i]);
            for (double& x : xs) x = sample_stable_one(params, sub);
            s2[r] = variance_mle(xs, mean_of(xs));
        }
        log_n.push_back(std::log(static_cast<double>(sizes[i])));
        log_med.push_back(std::log(median_of(std::move(s2))));
    }

    const double mx = mean_of(log_n);
    const double my = mean_of(log_med);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < log_n.size(); ++i) {
        sxy += (log_n[i] - mx) * (log_med[i] - my);
        sxx += (log_n[i] - mx) * (log_n[i] - mx);
    }
    return sxy / sxx;
}

} // namespace tailgauge
