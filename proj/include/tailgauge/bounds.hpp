#ifndef TAILGAUGE_BOUNDS_HPP
#define TAILGAUGE_BOUNDS_HPP

#include <optional>

#include "tailgauge/distribution.hpp"

namespace tailgauge {

// Smallest level at which the unimodal (Gauss) bound applies.
inline const double kGaussBoundMinKappa = 2.0 / std::sqrt(3.0);

struct BoundReport {
    double kappa = 0.0;
    double chebyshev_selberg = 0.0;                    // 1/kappa^2
    std::optional<double> gauss;                       // 4/(9 kappa^2), kappa > 2/sqrt(3)
    double extremal_three_point_p = 0.0;               // p attaining Selberg: 1/kappa^2
    std::optional<double> extremal_spike_uniform_p;    // p* attaining Gauss: 4/(3 kappa^2)
};

/// Chebyshev/Selberg level bound 1/kappa^2, kappa > 1. The three-point law
/// of example1_spec(1/kappa^2) attains it exactly.
double selberg_bound(double kappa);

/// Unimodal bound 4/(9 kappa^2), applicable for kappa > 2/sqrt(3); throws
/// SpecError("gauss bound inapplicable...") otherwise.
double gauss_bound(double kappa);

/// Three-point law on {-1, 0, 1} with masses {p/2, 1-p, p/2}; the essentially
/// unique attainer of the Selberg level for kappa in (1, 1/sqrt(p)].
DistributionSpec example1_spec(double p);

/// Spike-plus-shoulder law: atom at 0 with mass 1-p, U[-1,1] with mass p.
DistributionSpec example2_spec(double p);

/// P{|X| >= kappa sigma_X} for example2_spec(p): p(1 - kappa sqrt(p/3)),
/// clamped to 0 once kappa sqrt(p/3) exceeds 1.
double example2_prob(double p, double kappa);

struct Example2Max {
    double p_star = 0.0;
    double value = 0.0;
};

/// Maximizer of example2_prob over p: (4/(3 kappa^2), 4/(9 kappa^2)).
Example2Max example2_maximizer(double kappa);

BoundReport bound_report(double kappa);

} // namespace tailgauge

#endif
