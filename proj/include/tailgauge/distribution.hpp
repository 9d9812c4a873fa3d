#ifndef TAILGAUGE_DISTRIBUTION_HPP
#define TAILGAUGE_DISTRIBUTION_HPP

#include <cstddef>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tailgauge/rng.hpp"
#include "tailgauge/stable.hpp"

namespace tailgauge {

class DistributionSpec;

// Point mass. The weight field is only meaningful as shorthand when listing
// atoms of a discrete law; a constructed spec always carries unit-mass atoms,
// with the mass on the enclosing mixture component.
struct Atom {
    double value = 0.0;
    double weight = 1.0;
};

struct Uniform {
    double lo = 0.0;
    double hi = 1.0;
};

struct Normal {
    double mean = 0.0;
    double sd = 1.0;
};

struct MixtureComponent;

struct Mixture {
    std::vector<MixtureComponent> components;
};

// Law of Y = X/A with X standard normal and A having density
// q(a; alpha) = alpha/(a+1)^{alpha+1} on [0, inf), alpha > 2. Heavy index-1
// tails: no mean, no variance, cdf via quadrature.
struct ParetoScaleQuotient {
    double alpha = 3.0;
};

// Equals `base` on {|x| < threshold}; the remaining mass sits in an atom
// at zero.
struct Truncated {
    std::shared_ptr<const DistributionSpec> base;
    double threshold = 1.0;
};

struct MomentSummary {
    double mean = 0.0;          // NaN when the law has no mean
    double variance = 0.0;      // +inf when infinite
    double sd = 0.0;
    double support_lo = -std::numeric_limits<double>::infinity();
    double support_hi = std::numeric_limits<double>::infinity();
    bool finite_variance = true;
};

// Immutable algebraic description of a distribution. Cheap to copy and safe
// to share across threads; all randomness goes through an explicit RngState.
class DistributionSpec {
public:
    using Node = std::variant<Atom, Uniform, Normal, Mixture, StableParams,
                              ParetoScaleQuotient, Truncated>;

    static DistributionSpec atom(double value);
    static DistributionSpec uniform(double lo, double hi);
    static DistributionSpec normal(double mean, double sd);
    static DistributionSpec mixture(std::vector<std::pair<double, DistributionSpec>> components);
    // Discrete law written as weighted atoms, e.g. {-1: p/2, 0: 1-p, 1: p/2}.
    static DistributionSpec mixture_of_atoms(const std::vector<Atom>& atoms);
    static DistributionSpec stable(double alpha, StableSkew skew);
    static DistributionSpec pareto_scale_quotient(double alpha);
    static DistributionSpec truncated(DistributionSpec base, double threshold);

    const Node& node() const { return node_; }

private:
    explicit DistributionSpec(Node node) : node_(std::move(node)) {}
    Node node_;
};

struct MixtureComponent {
    double weight = 0.0;
    DistributionSpec dist;
};

MomentSummary moments(const DistributionSpec& spec);

// True when cdf()/upper_tail()/point_mass() can be evaluated: closed forms
// everywhere except general stable laws (Cauchy alpha=1 is available) and
// the quotient law, whose cdf goes through adaptive quadrature.
bool has_cdf(const DistributionSpec& spec);

double cdf(const DistributionSpec& spec, double x);         // P{X <= x}
double upper_tail(const DistributionSpec& spec, double x);  // P{X >= x}
double point_mass(const DistributionSpec& spec, double x);  // P{X == x}

DistributionSpec mirrored(const DistributionSpec& spec);
bool spec_equal(const DistributionSpec& a, const DistributionSpec& b);
bool is_symmetric_about_zero(const DistributionSpec& spec);

double sample_one(const DistributionSpec& spec, RngState& rng);
std::vector<double> sample(const DistributionSpec& spec, std::size_t n, RngState& rng);

/// Compactification: map {|X| >= threshold} to an atom at 0. Requires a
/// finite-variance spec symmetric about zero and threshold > kappa * sigma;
/// the result's variance is strictly smaller whenever the cut carries mass.
DistributionSpec truncate(const DistributionSpec& spec, double kappa, double threshold);

// Default threshold 2*kappa*sigma; any value > kappa*sigma is admissible.
double default_truncation_threshold(const DistributionSpec& spec, double kappa);

// JSON wire format, e.g.
//   {"type":"mixture","components":[
//       {"weight":"71/75","dist":{"type":"uniform","lo":-0.1,"hi":0.1}},
//       {"weight":"4/75","dist":{"type":"uniform","lo":-1,"hi":1}}]}
// Weights accept decimals or "p/q" rational strings.
nlohmann::json to_json(const DistributionSpec& spec);
DistributionSpec spec_from_json(const nlohmann::json& j);
DistributionSpec load_spec(const std::string& path);

} // namespace tailgauge

#endif
