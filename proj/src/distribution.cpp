#include "tailgauge/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tailgauge/errors.hpp"
#include "tailgauge/experiments.hpp"
#include "tailgauge/normal.hpp"

namespace tailgauge {

namespace {

constexpr double kWeightSumTol = 1e-12;
constexpr double kQuotientDivisorFloor = 1e-300;
const double kInf = std::numeric_limits<double>::infinity();
const double kNan = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const std::string& msg) {
    if (!ok) throw SpecError(msg);
}

// First and second moments of the base law restricted to the open interval
// (-A, A); the backbone of all truncation arithmetic.
struct PartialMoments {
    double mass = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
};

PartialMoments partial_moments(const DistributionSpec& spec, double a);

PartialMoments partial_moments_uniform(const Uniform& u, double a) {
    const double lo = std::max(u.lo, -a);
    const double hi = std::min(u.hi, a);
    if (hi <= lo) return {};
    const double len = u.hi - u.lo;
    PartialMoments pm;
    pm.mass = (hi - lo) / len;
    pm.m1 = (hi * hi - lo * lo) / (2.0 * len);
    pm.m2 = (hi * hi * hi - lo * lo * lo) / (3.0 * len);
    return pm;
}

PartialMoments partial_moments_normal(const Normal& n, double a) {
    const double alpha = (-a - n.mean) / n.sd;
    const double beta = (a - n.mean) / n.sd;
    const double mass = norm_cdf(beta) - norm_cdf(alpha);
    const double dphi = norm_pdf(alpha) - norm_pdf(beta);
    // E[Z 1] = phi(alpha) - phi(beta); E[Z^2 1] = mass + alpha phi(alpha) - beta phi(beta)
    const double ez = dphi;
    const double ez2 = mass + alpha * norm_pdf(alpha) - beta * norm_pdf(beta);
    PartialMoments pm;
    pm.mass = mass;
    pm.m1 = n.mean * mass + n.sd * ez;
    pm.m2 = n.mean * n.mean * mass + 2.0 * n.mean * n.sd * ez + n.sd * n.sd * ez2;
    return pm;
}

PartialMoments partial_moments(const DistributionSpec& spec, double a) {
    return std::visit(
        [a](const auto& node) -> PartialMoments {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Atom>) {
                if (std::abs(node.value) < a) return {1.0, node.value, node.value * node.value};
                return {};
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return partial_moments_uniform(node, a);
            } else if constexpr (std::is_same_v<T, Normal>) {
                return partial_moments_normal(node, a);
            } else if constexpr (std::is_same_v<T, Mixture>) {
                PartialMoments pm;
                for (const auto& c : node.components) {
                    if (c.weight == 0.0) continue;
                    const PartialMoments p = partial_moments(c.dist, a);
                    pm.mass += c.weight * p.mass;
                    pm.m1 += c.weight * p.m1;
                    pm.m2 += c.weight * p.m2;
                }
                return pm;
            } else if constexpr (std::is_same_v<T, Truncated>) {
                const double inner_cut = std::min(node.threshold, a);
                PartialMoments pm = partial_moments(*node.base, inner_cut);
                const double kept = partial_moments(*node.base, node.threshold).mass;
                pm.mass += 1.0 - kept; // atom at zero, always inside (-a, a)
                return pm;
            } else {
                throw UnsupportedSpecError(
                    "partial moments unavailable: law has no closed-form moments");
            }
        },
        spec.node());
}

} // namespace

// ---------------------------------------------------------------------------
// construction / validation

DistributionSpec DistributionSpec::atom(double value) {
    require(std::isfinite(value), "atom value must be finite");
    return DistributionSpec(Atom{value, 1.0});
}

DistributionSpec DistributionSpec::uniform(double lo, double hi) {
    require(std::isfinite(lo) && std::isfinite(hi), "uniform bounds must be finite");
    require(lo < hi, "uniform requires lo < hi");
    return DistributionSpec(Uniform{lo, hi});
}

DistributionSpec DistributionSpec::normal(double mean, double sd) {
    require(std::isfinite(mean) && std::isfinite(sd), "normal parameters must be finite");
    require(sd > 0.0, "normal requires sd > 0");
    return DistributionSpec(Normal{mean, sd});
}

DistributionSpec DistributionSpec::mixture(
    std::vector<std::pair<double, DistributionSpec>> components) {
    require(!components.empty(), "mixture requires at least one component");
    double sum = 0.0;
    Mixture mix;
    mix.components.reserve(components.size());
    for (auto& [w, d] : components) {
        require(std::isfinite(w) && w >= 0.0 && w <= 1.0, "mixture weight must lie in [0,1]");
        if (const auto* at = std::get_if<Atom>(&d.node())) {
            require(at->weight == 1.0,
                    "atoms inside a mixture must carry unit mass; put the mass on the component");
        }
        sum += w;
        mix.components.push_back(MixtureComponent{w, std::move(d)});
    }
    require(std::abs(sum - 1.0) <= kWeightSumTol, "mixture weights must sum to 1 within 1e-12");
    return DistributionSpec(Node{std::move(mix)});
}

DistributionSpec DistributionSpec::mixture_of_atoms(const std::vector<Atom>& atoms) {
    std::vector<std::pair<double, DistributionSpec>> comps;
    comps.reserve(atoms.size());
    for (const Atom& a : atoms) comps.emplace_back(a.weight, DistributionSpec::atom(a.value));
    return mixture(std::move(comps));
}

DistributionSpec DistributionSpec::stable(double alpha, StableSkew skew) {
    StableParams p{alpha, skew};
    validate(p);
    return DistributionSpec(Node{p});
}

DistributionSpec DistributionSpec::pareto_scale_quotient(double alpha) {
    require(std::isfinite(alpha) && alpha > 2.0, "pareto scale quotient requires alpha > 2");
    return DistributionSpec(ParetoScaleQuotient{alpha});
}

DistributionSpec DistributionSpec::truncated(DistributionSpec base, double threshold) {
    require(std::isfinite(threshold) && threshold > 0.0, "truncation threshold must be > 0");
    Truncated t;
    t.base = std::make_shared<const DistributionSpec>(std::move(base));
    t.threshold = threshold;
    return DistributionSpec(Node{std::move(t)});
}

// ---------------------------------------------------------------------------
// moments

MomentSummary moments(const DistributionSpec& spec) {
    return std::visit(
        [&spec](const auto& node) -> MomentSummary {
            using T = std::decay_t<decltype(node)>;
            MomentSummary ms;
            if constexpr (std::is_same_v<T, Atom>) {
                ms.mean = node.value;
                ms.variance = 0.0;
                ms.support_lo = ms.support_hi = node.value;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                ms.mean = 0.5 * (node.lo + node.hi);
                const double len = node.hi - node.lo;
                ms.variance = len * len / 12.0;
                ms.support_lo = node.lo;
                ms.support_hi = node.hi;
            } else if constexpr (std::is_same_v<T, Normal>) {
                ms.mean = node.mean;
                ms.variance = node.sd * node.sd;
            } else if constexpr (std::is_same_v<T, Mixture>) {
                // Law of total mean / total variance.
                double mean = 0.0, second = 0.0;
                bool finite = true;
                double lo = kInf, hi = -kInf;
                for (const auto& c : node.components) {
                    if (c.weight == 0.0) continue;
                    const MomentSummary cm = moments(c.dist);
                    mean += c.weight * cm.mean;
                    second += c.weight * (cm.variance + cm.mean * cm.mean);
                    finite = finite && cm.finite_variance;
                    lo = std::min(lo, cm.support_lo);
                    hi = std::max(hi, cm.support_hi);
                }
                ms.mean = mean;
                ms.variance = finite ? second - mean * mean : kInf;
                ms.finite_variance = finite;
                ms.support_lo = lo;
                ms.support_hi = hi;
                if (!finite) ms.mean = mean; // may be NaN via components
            } else if constexpr (std::is_same_v<T, StableParams>) {
                if (node.skew == StableSkew::one_sided_positive) {
                    ms.mean = kInf;
                    ms.support_lo = 0.0;
                } else {
                    // Symmetry center 0 is the mean for alpha > 1; no mean below.
                    ms.mean = node.alpha > 1.0 ? 0.0 : kNan;
                }
                ms.variance = kInf;
                ms.finite_variance = false;
            } else if constexpr (std::is_same_v<T, ParetoScaleQuotient>) {
                // E|Y| and Var Y both diverge (index-1 tails): the divisor A
                // has density alpha at the origin for every alpha.
                ms.mean = kNan;
                ms.variance = kInf;
                ms.finite_variance = false;
            } else {
                const PartialMoments pm = partial_moments(*node.base, node.threshold);
                ms.mean = pm.m1;
                ms.variance = std::max(0.0, pm.m2 - pm.m1 * pm.m1);
                const MomentSummary bm = moments(*node.base);
                ms.support_lo = std::min(0.0, std::max(bm.support_lo, -node.threshold));
                ms.support_hi = std::max(0.0, std::min(bm.support_hi, node.threshold));
            }
            ms.sd = std::sqrt(ms.variance);
            return ms;
        },
        spec.node());
}

// ---------------------------------------------------------------------------
// cdf / tails / point mass

bool has_cdf(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& node) -> bool {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Mixture>) {
                for (const auto& c : node.components)
                    if (!has_cdf(c.dist)) return false;
                return true;
            } else if constexpr (std::is_same_v<T, StableParams>) {
                return std::abs(node.alpha - 1.0) < 1e-10 &&
                       node.skew == StableSkew::symmetric; // Cauchy
            } else if constexpr (std::is_same_v<T, Truncated>) {
                return has_cdf(*node.base);
            } else {
                return true;
            }
        },
        spec.node());
}

double cdf(const DistributionSpec& spec, double x) {
    return std::visit(
        [x](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Atom>) {
                return x >= node.value ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                if (x <= node.lo) return 0.0;
                if (x >= node.hi) return 1.0;
                return (x - node.lo) / (node.hi - node.lo);
            } else if constexpr (std::is_same_v<T, Normal>) {
                return norm_cdf((x - node.mean) / node.sd);
            } else if constexpr (std::is_same_v<T, Mixture>) {
                double f = 0.0;
                for (const auto& c : node.components)
                    if (c.weight != 0.0) f += c.weight * cdf(c.dist, x);
                return f;
            } else if constexpr (std::is_same_v<T, StableParams>) {
                if (std::abs(node.alpha - 1.0) < 1e-10 && node.skew == StableSkew::symmetric)
                    return 0.5 + std::atan(x) / M_PI;
                throw UnsupportedSpecError("cdf unavailable for general stable laws");
            } else if constexpr (std::is_same_v<T, ParetoScaleQuotient>) {
                return quotient_cdf(node.alpha, x, QuadratureSettings{});
            } else {
                const double a = node.threshold;
                if (x < -a) return 0.0;
                if (x >= a) return 1.0;
                const double fa_lo = cdf(*node.base, -a);
                const double kept = cdf(*node.base, x) - fa_lo;
                if (x < 0.0) return std::max(0.0, kept);
                const double fa_hi = cdf(*node.base, a) - point_mass(*node.base, a);
                const double q = 1.0 - (fa_hi - fa_lo);
                return std::min(1.0, kept + q);
            }
        },
        spec.node());
}

double upper_tail(const DistributionSpec& spec, double x) {
    return std::visit(
        [x](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Atom>) {
                return node.value >= x ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                if (x <= node.lo) return 1.0;
                if (x >= node.hi) return 0.0;
                return (node.hi - x) / (node.hi - node.lo);
            } else if constexpr (std::is_same_v<T, Normal>) {
                return norm_upper_tail((x - node.mean) / node.sd);
            } else if constexpr (std::is_same_v<T, Mixture>) {
                double p = 0.0;
                for (const auto& c : node.components)
                    if (c.weight != 0.0) p += c.weight * upper_tail(c.dist, x);
                return p;
            } else if constexpr (std::is_same_v<T, StableParams>) {
                if (std::abs(node.alpha - 1.0) < 1e-10 && node.skew == StableSkew::symmetric)
                    return 0.5 - std::atan(x) / M_PI;
                throw UnsupportedSpecError("cdf unavailable for general stable laws");
            } else if constexpr (std::is_same_v<T, ParetoScaleQuotient>) {
                return 1.0 - quotient_cdf(node.alpha, x, QuadratureSettings{});
            } else {
                const double a = node.threshold;
                if (x <= -a) return 1.0;
                if (x >= a) return 0.0;
                const double band = upper_tail(*node.base, x) - upper_tail(*node.base, a);
                if (x > 0.0) return std::max(0.0, band);
                const double fa_lo = cdf(*node.base, -a);
                const double fa_hi = cdf(*node.base, a) - point_mass(*node.base, a);
                const double q = 1.0 - (fa_hi - fa_lo);
                return std::min(1.0, band + q);
            }
        },
        spec.node());
}

double point_mass(const DistributionSpec& spec, double x) {
    return std::visit(
        [x](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Atom>) {
                return x == node.value ? 1.0 : 0.0;
            } else if constexpr (std::is_same_v<T, Mixture>) {
                double p = 0.0;
                for (const auto& c : node.components)
                    if (c.weight != 0.0) p += c.weight * point_mass(c.dist, x);
                return p;
            } else if constexpr (std::is_same_v<T, Truncated>) {
                const double a = node.threshold;
                double p = 0.0;
                if (std::abs(x) < a) p += point_mass(*node.base, x);
                if (x == 0.0) p += 1.0 - partial_moments(*node.base, a).mass;
                return p;
            } else {
                return 0.0; // continuous (or treated as such) variants
            }
        },
        spec.node());
}

// ---------------------------------------------------------------------------
// structure: mirror, equality, symmetry

DistributionSpec mirrored(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& node) -> DistributionSpec {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Atom>) {
                return DistributionSpec::atom(-node.value);
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return DistributionSpec::uniform(-node.hi, -node.lo);
            } else if constexpr (std::is_same_v<T, Normal>) {
                return DistributionSpec::normal(-node.mean, node.sd);
            } else if constexpr (std::is_same_v<T, Mixture>) {
                std::vector<std::pair<double, DistributionSpec>> comps;
                comps.reserve(node.components.size());
                for (const auto& c : node.components) comps.emplace_back(c.weight, mirrored(c.dist));
                return DistributionSpec::mixture(std::move(comps));
            } else if constexpr (std::is_same_v<T, StableParams>) {
                if (node.skew == StableSkew::one_sided_positive)
                    throw UnsupportedSpecError("one-sided stable law has no representable mirror");
                return DistributionSpec::stable(node.alpha, node.skew);
            } else if constexpr (std::is_same_v<T, ParetoScaleQuotient>) {
                return DistributionSpec::pareto_scale_quotient(node.alpha);
            } else {
                return DistributionSpec::truncated(mirrored(*node.base), node.threshold);
            }
        },
        spec.node());
}

bool spec_equal(const DistributionSpec& a, const DistributionSpec& b) {
    if (a.node().index() != b.node().index()) return false;
    return std::visit(
        [&b](const auto& na) -> bool {
            using T = std::decay_t<decltype(na)>;
            const auto& nb = std::get<T>(b.node());
            if constexpr (std::is_same_v<T, Atom>) {
                return na.value == nb.value && na.weight == nb.weight;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return na.lo == nb.lo && na.hi == nb.hi;
            } else if constexpr (std::is_same_v<T, Normal>) {
                return na.mean == nb.mean && na.sd == nb.sd;
            } else if constexpr (std::is_same_v<T, Mixture>) {
                if (na.components.size() != nb.components.size()) return false;
                // Unordered comparison: match components greedily.
                std::vector<bool> used(nb.components.size(), false);
                for (const auto& ca : na.components) {
                    bool found = false;
                    for (std::size_t j = 0; j < nb.components.size(); ++j) {
                        if (used[j] || nb.components[j].weight != ca.weight) continue;
                        if (spec_equal(ca.dist, nb.components[j].dist)) {
                            used[j] = true;
                            found = true;
                            break;
                        }
                    }
                    if (!found) return false;
                }
                return true;
            } else if constexpr (std::is_same_v<T, StableParams>) {
                return na.alpha == nb.alpha && na.skew == nb.skew;
            } else if constexpr (std::is_same_v<T, ParetoScaleQuotient>) {
                return na.alpha == nb.alpha;
            } else {
                return na.threshold == nb.threshold && spec_equal(*na.base, *nb.base);
            }
        },
        a.node());
}

bool is_symmetric_about_zero(const DistributionSpec& spec) {
    if (const auto* st = std::get_if<StableParams>(&spec.node()))
        return st->skew == StableSkew::symmetric;
    if (std::holds_alternative<ParetoScaleQuotient>(spec.node())) return true;
    try {
        return spec_equal(spec, mirrored(spec));
    } catch (const UnsupportedSpecError&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// sampling

double sample_one(const DistributionSpec& spec, RngState& rng) {
    return std::visit(
        [&rng](const auto& node) -> double {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Atom>) {
                return node.value;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                return node.lo + (node.hi - node.lo) * rng.uniform01();
            } else if constexpr (std::is_same_v<T, Normal>) {
                return node.mean + node.sd * rng.normal();
            } else if constexpr (std::is_same_v<T, Mixture>) {
                const double u = rng.uniform01();
                double acc = 0.0;
                const auto& comps = node.components;
                for (std::size_t i = 0; i + 1 < comps.size(); ++i) {
                    acc += comps[i].weight;
                    if (u < acc) return sample_one(comps[i].dist, rng);
                }
                return sample_one(comps.back().dist, rng);
            } else if constexpr (std::is_same_v<T, StableParams>) {
                return sample_stable_one(node, rng);
            } else if constexpr (std::is_same_v<T, ParetoScaleQuotient>) {
                // A = u^{-1/alpha} - 1 inverts the Pareto-type cdf of the
                // divisor; values below 1e-300 are clamped (event probability
                // < 1e-297, statistically invisible, avoids overflow).
                const double u = rng.uniform01();
                const double a = std::max(std::pow(u, -1.0 / node.alpha) - 1.0,
                                          kQuotientDivisorFloor);
                return rng.normal() / a;
            } else {
                const double x = sample_one(*node.base, rng);
                return std::abs(x) >= node.threshold ? 0.0 : x;
            }
        },
        spec.node());
}

std::vector<double> sample(const DistributionSpec& spec, std::size_t n, RngState& rng) {
    if (n == 0) throw SpecError("sample size must be >= 1");
    std::vector<double> out(n);
    for (double& x : out) x = sample_one(spec, rng);
    return out;
}

// ---------------------------------------------------------------------------
// truncation

DistributionSpec truncate(const DistributionSpec& spec, double kappa, double threshold) {
    require(kappa > 1.0, "truncate requires kappa > 1");
    const MomentSummary ms = moments(spec);
    if (!ms.finite_variance)
        throw UnsupportedSpecError("truncate requires a finite-variance spec");
    if (!is_symmetric_about_zero(spec))
        throw SpecError("truncate requires a spec symmetric about zero");
    if (!(threshold > kappa * ms.sd))
        throw SpecError("truncation threshold must exceed kappa * sigma");
    return DistributionSpec::truncated(spec, threshold);
}

double default_truncation_threshold(const DistributionSpec& spec, double kappa) {
    return 2.0 * kappa * moments(spec).sd;
}

// ---------------------------------------------------------------------------
// JSON

namespace {

double parse_weight(const nlohmann::json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        const auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return std::stod(s);
            const double num = std::stod(s.substr(0, slash));
            const double den = std::stod(s.substr(slash + 1));
            if (den == 0.0) throw SpecError("weight denominator is zero: " + s);
            return num / den;
        } catch (const std::logic_error&) {
            throw SpecError("cannot parse weight: " + s);
        }
    }
    throw SpecError("weight must be a number or a \"p/q\" string");
}

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
    const auto it = j.find(name);
    if (it == j.end()) throw SpecError(std::string("missing field: ") + name);
    return *it;
}

} // namespace

nlohmann::json to_json(const DistributionSpec& spec) {
    return std::visit(
        [](const auto& node) -> nlohmann::json {
            using T = std::decay_t<decltype(node)>;
            nlohmann::json j;
            if constexpr (std::is_same_v<T, Atom>) {
                j["type"] = "atom";
                j["value"] = node.value;
            } else if constexpr (std::is_same_v<T, Uniform>) {
                j["type"] = "uniform";
                j["lo"] = node.lo;
                j["hi"] = node.hi;
            } else if constexpr (std::is_same_v<T, Normal>) {
                j["type"] = "normal";
                j["mean"] = node.mean;
                j["sd"] = node.sd;
            } else if constexpr (std::is_same_v<T, Mixture>) {
                j["type"] = "mixture";
                auto& comps = j["components"] = nlohmann::json::array();
                for (const auto& c : node.components)
                    comps.push_back({{"weight", c.weight}, {"dist", to_json(c.dist)}});
            } else if constexpr (std::is_same_v<T, StableParams>) {
                j["type"] = "stable";
                j["alpha"] = node.alpha;
                j["skew"] = node.skew == StableSkew::symmetric ? "symmetric" : "one_sided_positive";
            } else if constexpr (std::is_same_v<T, ParetoScaleQuotient>) {
                j["type"] = "pareto_scale_quotient";
                j["alpha"] = node.alpha;
            } else {
                j["type"] = "truncated";
                j["base"] = to_json(*node.base);
                j["threshold"] = node.threshold;
            }
            return j;
        },
        spec.node());
}

DistributionSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw SpecError("distribution spec must be a JSON object");
    const std::string type = field(j, "type").get<std::string>();
    if (type == "atom") {
        if (j.contains("weight") && parse_weight(j["weight"]) != 1.0)
            throw SpecError("standalone atom must have weight 1; "
                            "weighted atoms belong in mixture components");
        return DistributionSpec::atom(field(j, "value").get<double>());
    }
    if (type == "uniform")
        return DistributionSpec::uniform(field(j, "lo").get<double>(),
                                         field(j, "hi").get<double>());
    if (type == "normal")
        return DistributionSpec::normal(field(j, "mean").get<double>(),
                                        field(j, "sd").get<double>());
    if (type == "mixture") {
        std::vector<std::pair<double, DistributionSpec>> comps;
        for (const auto& c : field(j, "components")) {
            if (c.contains("dist")) {
                comps.emplace_back(parse_weight(field(c, "weight")), spec_from_json(c["dist"]));
            } else if (c.contains("type") && c["type"] == "atom") {
                // Shorthand: a weighted atom stands for its own component.
                const double w = c.contains("weight") ? parse_weight(c["weight"]) : 1.0;
                comps.emplace_back(w, DistributionSpec::atom(field(c, "value").get<double>()));
            } else {
                throw SpecError("mixture component needs {weight, dist} or a weighted atom");
            }
        }
        return DistributionSpec::mixture(std::move(comps));
    }
    if (type == "stable") {
        const std::string skew = field(j, "skew").get<std::string>();
        if (skew != "symmetric" && skew != "one_sided_positive")
            throw SpecError("stable skew must be symmetric or one_sided_positive");
        return DistributionSpec::stable(field(j, "alpha").get<double>(),
                                        skew == "symmetric" ? StableSkew::symmetric
                                                            : StableSkew::one_sided_positive);
    }
    if (type == "pareto_scale_quotient")
        return DistributionSpec::pareto_scale_quotient(field(j, "alpha").get<double>());
    if (type == "truncated")
        return DistributionSpec::truncated(spec_from_json(field(j, "base")),
                                           field(j, "threshold").get<double>());
    throw SpecError("unknown distribution type: " + type);
}

DistributionSpec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open spec file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SpecError("malformed JSON in " + path + ": " + e.what());
    }
    return spec_from_json(j);
}

} // namespace tailgauge
