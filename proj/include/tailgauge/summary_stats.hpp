#ifndef TAILGAUGE_SUMMARY_STATS_HPP
#define TAILGAUGE_SUMMARY_STATS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "tailgauge/rng.hpp"

namespace tailgauge {

inline double mean_of(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

// 1/n-normalized empirical variance, matching the plug-in s_n^2 used by the
// outlier functionals (not the n-1 unbiased form).
inline double variance_mle(std::span<const double> xs, double mean) {
    double s = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        s += d * d;
    }
    return s / static_cast<double>(xs.size());
}

inline double median_of(std::vector<double> xs) {
    if (xs.empty()) throw std::invalid_argument("median of empty range");
    const std::size_t n = xs.size();
    const std::size_t mid = n / 2;
    std::nth_element(xs.begin(), xs.begin() + mid, xs.end());
    double hi = xs[mid];
    if (n % 2 == 1) return hi;
    double lo = *std::max_element(xs.begin(), xs.begin() + mid);
    return 0.5 * (lo + hi);
}

// Standard deviation of medians over `resamples` bootstrap resamples.
inline double bootstrap_se_of_median(std::span<const double> xs, std::size_t resamples,
                                     RngState& rng) {
    if (xs.empty()) throw std::invalid_argument("bootstrap of empty range");
    std::vector<double> meds(resamples);
    std::vector<double> work(xs.size());
    for (std::size_t r = 0; r < resamples; ++r) {
        for (std::size_t i = 0; i < xs.size(); ++i) work[i] = xs[rng.uniform_index(xs.size())];
        meds[r] = median_of(work);
    }
    const double m = mean_of(meds);
    double s = 0.0;
    for (double v : meds) s += (v - m) * (v - m);
    return resamples > 1 ? std::sqrt(s / static_cast<double>(resamples - 1)) : 0.0;
}

} // namespace tailgauge

#endif
