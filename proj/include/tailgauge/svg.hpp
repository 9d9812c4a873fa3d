#ifndef TAILGAUGE_SVG_HPP
#define TAILGAUGE_SVG_HPP

#include <string>

#include "tailgauge/experiments.hpp"

namespace tailgauge {

enum class ChartKind { scatter, histogram, line };

/// Self-contained SVG text for an experiment result.
///   scatter   - sample values on the x axis, observation index on the y
///               axis; when the result carries a "sigma" extra, two vertical
///               rules (class "rule") are drawn at +- kappa * sigma.
///   histogram - one bar (class "bar") per bin.
///   line      - polyline through (x, value) with point markers.
/// Throws SpecError for an empty result.
std::string render_svg(const ExperimentResult& result, ChartKind kind);

} // namespace tailgauge

#endif
