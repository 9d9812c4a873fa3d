// tailgauge: outlier probabilities, concentration bounds and seeded
// experiments for level-kappa outliers over algebraic distribution specs.
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tailgauge/bounds.hpp"
#include "tailgauge/distribution.hpp"
#include "tailgauge/errors.hpp"
#include "tailgauge/experiments.hpp"
#include "tailgauge/outlier_stats.hpp"
#include "tailgauge/result_io.hpp"
#include "tailgauge/stable.hpp"
#include "tailgauge/svg.hpp"

namespace {

using namespace tailgauge;

// Everything is assembled in memory first and written in one shot, so a
// failed run never leaves a partial output file behind.
void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SpecError("cannot open output file: " + path);
    out << content;
    if (!out) throw SpecError("failed while writing: " + path);
}

std::vector<double> load_data_column(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open data file: " + path);
    std::vector<double> xs;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string token = line;
        const auto comma = token.find(',');
        if (comma != std::string::npos) token = token.substr(0, comma);
        token.erase(0, token.find_first_not_of(" \t"));
        token.erase(token.find_last_not_of(" \t") + 1);
        if (token.empty()) continue;
        try {
            std::size_t used = 0;
            const double v = std::stod(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            xs.push_back(v);
        } catch (const std::logic_error&) {
            if (first) { first = false; continue; } // optional header row
            throw SpecError("cannot parse data value: " + token);
        }
        first = false;
    }
    if (xs.empty()) throw SpecError("no data values in " + path);
    return xs;
}

std::string bounds_csv(const BoundReport& r) {
    std::string out = "kappa,selberg,gauss,extremal_three_point_p,extremal_spike_uniform_p\n";
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out += fmt_g7(r.kappa) + ',' + fmt_g7(r.chebyshev_selberg) + ',' +
           fmt_g7(r.gauss.value_or(nan)) + ',' + fmt_g7(r.extremal_three_point_p) + ',' +
           fmt_g7(r.extremal_spike_uniform_p.value_or(nan)) + '\n';
    return out;
}

nlohmann::json bounds_json(const BoundReport& r) {
    nlohmann::json j;
    j["kappa"] = r.kappa;
    j["selberg"] = r.chebyshev_selberg;
    if (r.gauss) j["gauss"] = *r.gauss; else j["gauss"] = nullptr;
    j["extremal_three_point_p"] = r.extremal_three_point_p;
    if (r.extremal_spike_uniform_p) j["extremal_spike_uniform_p"] = *r.extremal_spike_uniform_p;
    else j["extremal_spike_uniform_p"] = nullptr;
    return j;
}

std::string estimate_csv(const OutlierEstimate& e) {
    std::string out = "kappa,n,estimate,std_error,flagged\n";
    out += fmt_g7(e.kappa) + ',' + std::to_string(e.n) + ',' + fmt_g7(e.estimate) + ',' +
           fmt_g7(e.std_error) + ',' + std::to_string(e.flagged) + '\n';
    return out;
}

struct CommonOut {
    std::string out_path;
    std::string format = "csv";
};

void emit(const CommonOut& common, const std::string& csv, const nlohmann::json& json_doc,
          bool echo_stdout = true) {
    const std::string payload = common.format == "json" ? json_doc.dump(2) + "\n" : csv;
    if (!common.out_path.empty())
        write_file(common.out_path, payload);
    else if (echo_stdout)
        std::cout << payload;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tailgauge: outlier probabilities, bounds and experiments "
                 "for level-kappa outliers"};
    app.require_subcommand(1);
    std::function<void()> action;

    // ---- bounds
    {
        auto* cmd = app.add_subcommand("bounds", "concentration bounds and extremal parameters");
        auto kappa = std::make_shared<double>(0.0);
        auto common = std::make_shared<CommonOut>();
        cmd->add_option("--kappa", *kappa, "outlier level, > 1")->required();
        cmd->add_option("--out,-o", common->out_path, "output file (default: stdout)");
        cmd->add_option("--format", common->format)->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([kappa, common, &action] {
            action = [kappa, common] {
                const BoundReport r = bound_report(*kappa);
                emit(*common, bounds_csv(r), bounds_json(r));
            };
        });
    }

    // ---- exact
    {
        auto* cmd = app.add_subcommand("exact", "exact p(kappa; X) for a spec file");
        auto spec_path = std::make_shared<std::string>();
        auto kappa = std::make_shared<double>(0.0);
        auto common = std::make_shared<CommonOut>();
        cmd->add_option("--spec", *spec_path, "JSON distribution spec")->required();
        cmd->add_option("--kappa", *kappa, "outlier level")->required();
        cmd->add_option("--out,-o", common->out_path, "optional output file");
        cmd->add_option("--format", common->format)->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([spec_path, kappa, common, &action] {
            action = [spec_path, kappa, common] {
                const OutlierEstimate e = exact_outlier_prob(load_spec(*spec_path), *kappa);
                std::cout << fmt_g7(e.estimate) << "\n";
                if (!common->out_path.empty()) {
                    nlohmann::json j{{"kappa", e.kappa}, {"probability", e.estimate}};
                    emit(*common,
                         "kappa,probability\n" + fmt_g7(e.kappa) + ',' + fmt_g7(e.estimate) +
                             '\n',
                         j, false);
                }
            };
        });
    }

    // ---- estimate
    {
        auto* cmd = app.add_subcommand("estimate", "Monte Carlo p_n estimate for a spec file");
        auto spec_path = std::make_shared<std::string>();
        auto kappa = std::make_shared<double>(0.0);
        auto n = std::make_shared<std::size_t>(0);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto common = std::make_shared<CommonOut>();
        cmd->add_option("--spec", *spec_path)->required();
        cmd->add_option("--kappa", *kappa)->required();
        cmd->add_option("--n", *n, "sample size, >= 100")->required();
        cmd->add_option("--seed", *seed)->envname("TAILGAUGE_SEED");
        cmd->add_option("--out,-o", common->out_path);
        cmd->add_option("--format", common->format)->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([=, &action] {
            action = [=] {
                RngState rng = RngState(*seed).substream(0);
                const OutlierEstimate e = mc_outlier_prob(load_spec(*spec_path), *kappa, *n, rng);
                nlohmann::json j{{"kappa", e.kappa},       {"n", e.n},
                                 {"estimate", e.estimate}, {"std_error", e.std_error},
                                 {"flagged", e.flagged},   {"seed", *seed}};
                emit(*common, estimate_csv(e), j);
            };
        });
    }

    // ---- flag
    {
        auto* cmd = app.add_subcommand("flag", "indices of level-kappa outliers in a data file");
        auto data_path = std::make_shared<std::string>();
        auto kappa = std::make_shared<double>(0.0);
        auto out_path = std::make_shared<std::string>();
        cmd->add_option("--data", *data_path, "single-column CSV, optional header")->required();
        cmd->add_option("--kappa", *kappa)->required();
        cmd->add_option("--out,-o", *out_path);
        cmd->callback([=, &action] {
            action = [=] {
                const auto xs = load_data_column(*data_path);
                const auto idx = flag_outliers(xs, *kappa);
                std::string out;
                for (std::size_t i : idx) out += std::to_string(i) + '\n';
                if (!out_path->empty()) write_file(*out_path, out);
                else std::cout << out;
                std::cerr << idx.size() << " of " << xs.size() << " observations flagged\n";
            };
        });
    }

    // ---- truncate-demo
    {
        auto* cmd = app.add_subcommand(
            "truncate-demo", "exact and Monte Carlo p(kappa) before/after truncation");
        auto spec_path = std::make_shared<std::string>();
        auto kappa = std::make_shared<double>(0.0);
        auto threshold = std::make_shared<double>(0.0);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto common = std::make_shared<CommonOut>();
        cmd->add_option("--spec", *spec_path)->required();
        cmd->add_option("--kappa", *kappa)->required();
        cmd->add_option("--threshold", *threshold, "cut level A, must exceed kappa*sigma")
            ->required();
        cmd->add_option("--seed", *seed)->envname("TAILGAUGE_SEED");
        cmd->add_option("--out,-o", common->out_path);
        cmd->add_option("--format", common->format)->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([=, &action] {
            action = [=] {
                const auto res =
                    run_truncation_demo(load_spec(*spec_path), *kappa, *threshold, *seed);
                emit(*common, to_csv(res), to_json_envelope(res));
                std::cerr << res.notes << "\n";
            };
        });
    }

    // ---- stable-convergence
    {
        auto* cmd = app.add_subcommand("stable-convergence",
                                       "median empirical p_n of stable samples across sizes");
        auto alpha = std::make_shared<double>(0.0);
        auto kappa = std::make_shared<double>(5.0);
        auto sizes = std::make_shared<std::vector<std::size_t>>();
        auto reps = std::make_shared<std::size_t>(200);
        auto seed = std::make_shared<std::uint64_t>(1);
        auto common = std::make_shared<CommonOut>();
        cmd->add_option("--alpha", *alpha, "stability index in (0,2)")->required();
        cmd->add_option("--kappa", *kappa);
        cmd->add_option("--sizes", *sizes, "comma-separated sample sizes")
            ->required()
            ->delimiter(',');
        cmd->add_option("--reps", *reps, "replications per size, >= 50");
        cmd->add_option("--seed", *seed)->envname("TAILGAUGE_SEED");
        cmd->add_option("--out,-o", common->out_path);
        cmd->add_option("--format", common->format)->check(CLI::IsMember({"csv", "json"}));
        cmd->callback([=, &action] {
            action = [=] {
                const auto res = run_stable_collapse(*alpha, *kappa, *sizes, *reps, *seed);
                emit(*common, to_csv(res), to_json_envelope(res));
            };
        });
    }

    // ---- reproduce
    {
        auto* cmd = app.add_subcommand("reproduce", "rebuild a figure: CSV plus SVG");
        auto which = std::make_shared<std::string>();
        auto seed = std::make_shared<std::uint64_t>(1);
        auto common = std::make_shared<CommonOut>();
        auto svg_path = std::make_shared<std::string>();
        auto fig4_n = std::make_shared<std::size_t>(100000);
        auto fig4_reps = std::make_shared<std::size_t>(50);
        auto fig4_kappa = std::make_shared<double>(5.0);
        auto fig4_alphas =
            std::make_shared<std::vector<double>>(std::vector<double>{2.5, 4.0, 6.0, 8.0, 10.0});
        cmd->add_option("figure", *which, "fig1, fig2, fig3 or fig4")
            ->required()
            ->check(CLI::IsMember({"fig1", "fig2", "fig3", "fig4"}));
        cmd->add_option("--seed", *seed)->envname("TAILGAUGE_SEED");
        cmd->add_option("--out,-o", common->out_path, "result file (default <figure>.csv)");
        cmd->add_option("--svg", *svg_path, "figure file (default <figure>.svg)");
        cmd->add_option("--format", common->format)->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--n", *fig4_n, "fig4: draws per sample");
        cmd->add_option("--reps", *fig4_reps, "fig4: replications per alpha");
        cmd->add_option("--kappa", *fig4_kappa, "fig4: outlier level");
        cmd->add_option("--alphas", *fig4_alphas, "fig4: alpha grid in (2,10]")->delimiter(',');
        cmd->callback([=, &action] {
            action = [=] {
                ExperimentResult res;
                ChartKind kind = ChartKind::scatter;
                std::string csv;
                if (*which == "fig1") {
                    res = run_fig1(*seed);
                    csv = to_csv(res);
                } else if (*which == "fig2") {
                    res = run_fig2_fig3(*seed);
                    csv = to_csv(res);
                } else if (*which == "fig3") {
                    res = run_fig2_fig3(*seed);
                    res.name = "fig3";
                    csv = to_histogram_csv(res);
                    kind = ChartKind::histogram;
                } else {
                    res = run_fig4(*fig4_alphas, *fig4_kappa, *fig4_n, *fig4_reps, *seed);
                    csv = to_csv(res);
                    kind = ChartKind::line;
                }
                const std::string svg = render_svg(res, kind);
                const std::string result_path =
                    common->out_path.empty()
                        ? *which + (common->format == "json" ? ".json" : ".csv")
                        : common->out_path;
                const std::string figure_path = svg_path->empty() ? *which + ".svg" : *svg_path;
                if (common->format == "json")
                    write_file(result_path, to_json_envelope(res).dump(2) + "\n");
                else
                    write_file(result_path, csv);
                write_file(figure_path, svg);
                std::cout << res.name << ": wrote " << result_path << " and " << figure_path
                          << " (seed " << *seed << ")\n";
                if (*which == "fig1" || *which == "fig2")
                    std::cout << "flagged " << extra_value(res, "flagged_true_sigma") << "/"
                              << res.n << " at the fixed +-" << fmt_g7(res.kappa)
                              << " sigma rules, " << extra_value(res, "flagged_empirical")
                              << " by the empirical rule; exact p = "
                              << fmt_g7(extra_value(res, "exact_p")) << "\n";
            };
        });
    }

    // ---- quotient-cdf
    {
        auto* cmd = app.add_subcommand("quotient-cdf",
                                       "G(x; alpha) for the Pareto-scale Gaussian quotient");
        auto alpha = std::make_shared<double>(0.0);
        auto x = std::make_shared<double>(0.0);
        auto settings = std::make_shared<QuadratureSettings>();
        cmd->add_option("--alpha", *alpha, "> 2")->required();
        cmd->add_option("--x", *x)->required();
        cmd->add_option("--abs-tol", settings->abs_tol);
        cmd->add_option("--rel-tol", settings->rel_tol);
        cmd->add_option("--max-subdivisions", settings->max_subdivisions);
        cmd->callback([=, &action] {
            action = [=] { std::cout << fmt_g7(quotient_cdf(*alpha, *x, *settings)) << "\n"; };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1; // usage error (help/version exit cleanly)
    }

    try {
        action();
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateSampleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SpecError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
