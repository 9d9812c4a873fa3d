#ifndef TAILGAUGE_RESULT_IO_HPP
#define TAILGAUGE_RESULT_IO_HPP

#include <string>

#include "json.hpp"
#include "tailgauge/experiments.hpp"

namespace tailgauge {

// Locale-independent number formatting for CSV/SVG: decimal point, no
// separators, 7 significant digits.
std::string fmt_g7(double v);

// Header `x,value,std_error`, one row per experiment row.
std::string to_csv(const ExperimentResult& result);

// Header `bin_lo,bin_hi,count`; requires a histogram-producing result.
std::string to_histogram_csv(const ExperimentResult& result);

// Full envelope: rows, bins and metadata (seed, n, replications, kappa,
// extras, notes, runtime).
nlohmann::json to_json_envelope(const ExperimentResult& result);

} // namespace tailgauge

#endif
