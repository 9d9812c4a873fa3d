#include "tailgauge/result_io.hpp"

#include <cstdio>

#include "tailgauge/errors.hpp"

namespace tailgauge {

std::string fmt_g7(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.7g", v);
    return buf;
}

std::string to_csv(const ExperimentResult& result) {
    std::string out = "x,value,std_error\n";
    for (const ExperimentRow& r : result.rows) {
        out += fmt_g7(r.x);
        out += ',';
        out += fmt_g7(r.value);
        out += ',';
        out += fmt_g7(r.std_error);
        out += '\n';
    }
    return out;
}

std::string to_histogram_csv(const ExperimentResult& result) {
    if (result.bins.empty())
        throw SpecError("experiment '" + result.name + "' produced no histogram");
    std::string out = "bin_lo,bin_hi,count\n";
    for (const HistogramBin& b : result.bins) {
        out += fmt_g7(b.lo);
        out += ',';
        out += fmt_g7(b.hi);
        out += ',';
        out += std::to_string(b.count);
        out += '\n';
    }
    return out;
}

nlohmann::json to_json_envelope(const ExperimentResult& result) {
    nlohmann::json j;
    j["name"] = result.name;
    j["seed"] = result.seed;
    nlohmann::json meta;
    meta["n"] = result.n;
    meta["replications"] = result.replications;
    meta["kappa"] = result.kappa;
    meta["runtime_seconds"] = result.runtime_seconds;
    if (!result.notes.empty()) meta["notes"] = result.notes;
    nlohmann::json extras = nlohmann::json::object();
    for (const auto& [k, v] : result.extras) extras[k] = v;
    meta["extras"] = extras;
    j["metadata"] = meta;
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const ExperimentRow& r : result.rows) rows.push_back({r.x, r.value, r.std_error});
    if (!result.bins.empty()) {
        auto& bins = j["bins"] = nlohmann::json::array();
        for (const HistogramBin& b : result.bins) bins.push_back({b.lo, b.hi, b.count});
    }
    return j;
}

} // namespace tailgauge
