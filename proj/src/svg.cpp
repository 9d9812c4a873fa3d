#include "tailgauge/svg.hpp"

#include <algorithm>
#include <cmath>

#include "tailgauge/errors.hpp"
#include "tailgauge/result_io.hpp"

namespace tailgauge {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kMargin = 46.0;

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

// Linear map from data to viewport pixels; SVG y grows downward.
struct Frame {
    double x_min, x_max, y_min, y_max;

    double px(double x) const {
        return kMargin + (x - x_min) / span(x_min, x_max) * (kWidth - 2.0 * kMargin);
    }
    double py(double y) const {
        return kHeight - kMargin - (y - y_min) / span(y_min, y_max) * (kHeight - 2.0 * kMargin);
    }

private:
    static double span(double lo, double hi) { return hi > lo ? hi - lo : 1.0; }
};

void open_document(std::string& svg, const std::string& title) {
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_g7(kWidth) +
           "\" height=\"" + fmt_g7(kHeight) + "\" viewBox=\"0 0 " + fmt_g7(kWidth) + " " +
           fmt_g7(kHeight) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + fmt_g7(kWidth / 2.0) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">" +
           xml_escape(title) + "</text>\n";
}

void draw_axes(std::string& svg, const Frame& f) {
    svg += "<rect x=\"" + fmt_g7(kMargin) + "\" y=\"" + fmt_g7(kMargin) + "\" width=\"" +
           fmt_g7(kWidth - 2.0 * kMargin) + "\" height=\"" + fmt_g7(kHeight - 2.0 * kMargin) +
           "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    const auto label = [&svg](double x, double y, const std::string& text,
                              const std::string& anchor) {
        svg += "<text x=\"" + fmt_g7(x) + "\" y=\"" + fmt_g7(y) + "\" text-anchor=\"" + anchor +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#444\">" + text +
               "</text>\n";
    };
    label(kMargin, kHeight - kMargin + 16.0, fmt_g7(f.x_min), "middle");
    label(kWidth - kMargin, kHeight - kMargin + 16.0, fmt_g7(f.x_max), "middle");
    label(kMargin - 6.0, kHeight - kMargin, fmt_g7(f.y_min), "end");
    label(kMargin - 6.0, kMargin + 4.0, fmt_g7(f.y_max), "end");
}

std::string render_scatter(const ExperimentResult& result) {
    double v_lo = result.rows.front().value, v_hi = v_lo;
    for (const ExperimentRow& r : result.rows) {
        v_lo = std::min(v_lo, r.value);
        v_hi = std::max(v_hi, r.value);
    }
    bool has_rules = false;
    double rule = 0.0;
    for (const auto& [k, v] : result.extras) {
        if (k == "sigma") {
            has_rules = true;
            rule = result.kappa * v;
        }
    }
    if (has_rules) {
        v_lo = std::min(v_lo, -rule);
        v_hi = std::max(v_hi, rule);
    }
    const double pad = 0.05 * (v_hi - v_lo);
    Frame f{v_lo - pad, v_hi + pad, 0.0, static_cast<double>(result.rows.size())};

    std::string svg;
    open_document(svg, result.name + ": sample with level-" + fmt_g7(result.kappa) + " rules");
    draw_axes(svg, f);
    for (const ExperimentRow& r : result.rows)
        svg += "<circle class=\"pt\" cx=\"" + fmt_g7(f.px(r.value)) + "\" cy=\"" +
               fmt_g7(f.py(r.x)) + "\" r=\"2\" fill=\"steelblue\" fill-opacity=\"0.7\"/>\n";
    if (has_rules) {
        for (double sign : {-1.0, 1.0}) {
            const double x = f.px(sign * rule);
            svg += "<line class=\"rule\" x1=\"" + fmt_g7(x) + "\" y1=\"" + fmt_g7(f.py(f.y_min)) +
                   "\" x2=\"" + fmt_g7(x) + "\" y2=\"" + fmt_g7(f.py(f.y_max)) +
                   "\" stroke=\"crimson\" stroke-width=\"1.5\"/>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_histogram(const ExperimentResult& result) {
    std::uint64_t max_count = 1;
    for (const HistogramBin& b : result.bins) max_count = std::max(max_count, b.count);
    Frame f{result.bins.front().lo, result.bins.back().hi, 0.0,
            static_cast<double>(max_count)};

    std::string svg;
    open_document(svg, result.name + ": histogram");
    draw_axes(svg, f);
    for (const HistogramBin& b : result.bins) {
        const double x = f.px(b.lo);
        const double w = f.px(b.hi) - x;
        const double y = f.py(static_cast<double>(b.count));
        const double h = f.py(0.0) - y;
        svg += "<rect class=\"bar\" x=\"" + fmt_g7(x) + "\" y=\"" + fmt_g7(y) + "\" width=\"" +
               fmt_g7(std::max(w - 0.5, 0.5)) + "\" height=\"" + fmt_g7(h) +
               "\" fill=\"steelblue\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_line(const ExperimentResult& result) {
    double x_lo = result.rows.front().x, x_hi = x_lo;
    double v_lo = result.rows.front().value, v_hi = v_lo;
    for (const ExperimentRow& r : result.rows) {
        x_lo = std::min(x_lo, r.x);
        x_hi = std::max(x_hi, r.x);
        v_lo = std::min(v_lo, r.value - r.std_error);
        v_hi = std::max(v_hi, r.value + r.std_error);
    }
    Frame f{x_lo, x_hi, std::min(v_lo, 0.0), v_hi * 1.05};

    std::string svg;
    open_document(svg, result.name);
    draw_axes(svg, f);
    std::string points;
    for (const ExperimentRow& r : result.rows)
        points += fmt_g7(f.px(r.x)) + "," + fmt_g7(f.py(r.value)) + " ";
    svg += "<polyline class=\"series\" points=\"" + points +
           "\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
    for (const ExperimentRow& r : result.rows) {
        if (r.std_error > 0.0)
            svg += "<line class=\"err\" x1=\"" + fmt_g7(f.px(r.x)) + "\" y1=\"" +
                   fmt_g7(f.py(r.value - r.std_error)) + "\" x2=\"" + fmt_g7(f.px(r.x)) +
                   "\" y2=\"" + fmt_g7(f.py(r.value + r.std_error)) +
                   "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
        svg += "<circle class=\"pt\" cx=\"" + fmt_g7(f.px(r.x)) + "\" cy=\"" +
               fmt_g7(f.py(r.value)) + "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace

std::string render_svg(const ExperimentResult& result, ChartKind kind) {
    if (kind == ChartKind::histogram) {
        if (result.bins.empty()) throw SpecError("cannot render an empty histogram");
        return render_histogram(result);
    }
    if (result.rows.empty()) throw SpecError("cannot render an empty result");
    return kind == ChartKind::scatter ? render_scatter(result) : render_line(result);
}

} // namespace tailgauge
