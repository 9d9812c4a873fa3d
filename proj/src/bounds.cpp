#include "tailgauge/bounds.hpp"

#include <cmath>

#include "tailgauge/errors.hpp"

namespace tailgauge {

double selberg_bound(double kappa) {
    if (!(kappa > 1.0)) throw SpecError("selberg bound requires kappa > 1");
    return 1.0 / (kappa * kappa);
}

double gauss_bound(double kappa) {
    if (!(kappa > kGaussBoundMinKappa))
        throw SpecError("gauss bound inapplicable: requires kappa > 2/sqrt(3)");
    return 4.0 / (9.0 * kappa * kappa);
}

DistributionSpec example1_spec(double p) {
    if (!(p > 0.0 && p < 1.0)) throw SpecError("three-point mass p must lie in (0,1)");
    return DistributionSpec::mixture_of_atoms(
        {{-1.0, 0.5 * p}, {0.0, 1.0 - p}, {1.0, 0.5 * p}});
}

DistributionSpec example2_spec(double p) {
    if (!(p > 0.0 && p < 1.0)) throw SpecError("spike-uniform mass p must lie in (0,1)");
    return DistributionSpec::mixture(
        {{1.0 - p, DistributionSpec::atom(0.0)}, {p, DistributionSpec::uniform(-1.0, 1.0)}});
}

double example2_prob(double p, double kappa) {
    if (!(p > 0.0 && p <= 1.0)) throw SpecError("spike-uniform mass p must lie in (0,1]");
    if (kappa < 0.0) throw SpecError("kappa must be >= 0");
    const double reach = kappa * std::sqrt(p / 3.0);
    if (reach > 1.0) return 0.0; // level beyond the shoulder: no mass left
    return p * (1.0 - reach);
}

Example2Max example2_maximizer(double kappa) {
    if (!(kappa > kGaussBoundMinKappa))
        throw SpecError("spike-uniform maximizer requires kappa > 2/sqrt(3)");
    return {4.0 / (3.0 * kappa * kappa), 4.0 / (9.0 * kappa * kappa)};
}

BoundReport bound_report(double kappa) {
    BoundReport r;
    r.kappa = kappa;
    r.chebyshev_selberg = selberg_bound(kappa);
    r.extremal_three_point_p = r.chebyshev_selberg;
    if (kappa > kGaussBoundMinKappa) {
        r.gauss = gauss_bound(kappa);
        r.extremal_spike_uniform_p = example2_maximizer(kappa).p_star;
    }
    return r;
}

} // namespace tailgauge
