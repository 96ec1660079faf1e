// cli.cpp: Subcommands, config loading and exit-code mapping

#include "qbm/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qbm/ensemble_means.hpp"
#include "qbm/errors.hpp"
#include "qbm/indicators.hpp"
#include "qbm/parallel.hpp"
#include "qbm/regime_analysis.hpp"
#include "qbm/validation.hpp"

namespace qbm {

namespace {

FrequencyWindow window_of(const RunConfig& c) { return {c.env.omega_L, c.env.omega_U, c.model.Omega}; }

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

}  // namespace

int cmd_indicators(const RunConfig& config, const CommandOptions& options, std::ostream& log) {
    config.require({"env.omega_L", "env.omega_U"});
    config.validate();
    const auto grid = config.time_grid();
    const auto env = sample_environment(config.env, config.model);
    const auto tau = ThermalTime::from_temperature(config.env.T, config.model);
    const auto series = indicator_series(grid, config.run.delta_X, env, tau, config.model, options.jobs);

    std::ostringstream out;
    CsvWriter csv(out);
    std::vector<std::string> header{"t", "gamma_abs"};
    for (std::size_t j = 0; j < series.overlap.size(); ++j) header.push_back("overlap_mac_" + std::to_string(j + 1));
    csv.header(header);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::vector<double> row{grid[i], series.gamma_abs[i]};
        for (const auto& ov : series.overlap) row.push_back(ov[i]);
        csv.row(row);
    }
    const auto path = options.out_dir / "indicators.csv";
    write_file(path, out.str());
    log << "wrote " << path.string() << " (" << grid.size() << " rows)\n";
    return kExitOk;
}

int cmd_means(const RunConfig& config, const CommandOptions& options, std::ostream& log) {
    config.require({"env.omega_L", "env.omega_U"});
    config.validate();
    std::vector<MeanKind> kinds;
    for (const auto& k : options.kinds) kinds.push_back(parse_mean_kind(k));
    if (kinds.empty()) kinds = {MeanKind::LowT_f0, MeanKind::HighT_Gamma, MeanKind::HighT_B};
    const FrequencyWindow w = window_of(config);
    w.validate();
    const auto tau = ThermalTime::from_temperature(config.env.T, config.model);
    const auto grid = config.time_grid();
    const ExpansionGuards guards;

    for (MeanKind kind : kinds) {
        struct Row {
            double exact{0}, quad{0};
            std::optional<double> shrt, lng;
            std::string flags;
        };
        std::vector<Row> rows(grid.size());
        parallel_for(grid.size(), options.jobs, [&](std::size_t i) {
            const double t = grid[i];
            Row& r = rows[i];
            r.exact = t > 0.0 ? mean_exact(kind, t, w, tau, config.model) : 0.0;
            r.quad = mean_quadrature(kind, t, w, tau, config.model, 1e-10);
            if (guards.short_ok(t, w)) r.shrt = mean_short_time(kind, t, w, tau, config.model, guards);
            if (guards.long_ok(t, w)) r.lng = mean_long_time(kind, t, w, tau, config.model, guards);
            r.flags = r.shrt ? "short" : r.lng ? "long" : "intermediate";
        });
        std::ostringstream out;
        CsvWriter csv(out);
        csv.header({"t", "mean_exact", "mean_quadrature", "mean_short", "mean_long", "regime_flags"});
        double max_gap = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const Row& r = rows[i];
            if (r.quad != 0.0) max_gap = std::max(max_gap, std::abs(r.exact - r.quad) / std::abs(r.quad));
            csv.row({format_double(grid[i]), format_double(r.exact), format_double(r.quad), cell(r.shrt), cell(r.lng),
                     r.flags});
        }
        out << "# max_rel_gap_exact_vs_quadrature=" << format_double(max_gap) << '\n';
        const auto path = options.out_dir / ("means_" + std::string(to_string(kind)) + ".csv");
        write_file(path, out.str());
        log << "wrote " << path.string() << " (max exact/quadrature gap " << format_double(max_gap) << ")\n";
    }
    return kExitOk;
}

int cmd_regime(const RunConfig& config, const CommandOptions& options, std::ostream& log) {
    config.require({"env.omega_L", "env.omega_U", "env.T", "run.delta_X"});
    config.validate();
    AveragingWindow window;
    window.t_start = config.run.t_min;
    const auto report = sbs_verdict(config.env, config.model, config.run.delta_X, config.run.epsilon_dec,
                                    config.run.epsilon_ort, window, options.jobs);
    const auto path = options.out_dir / "regime_report.json";
    write_file(path, report_to_json(report, config));
    const std::string table = report_to_table(report);
    write_file(options.out_dir / "regime_report.txt", table);
    log << table << "wrote " << path.string() << "\n";
    return kExitOk;
}

int cmd_validate(const RunConfig& config, const CommandOptions& options, std::ostream& log) {
    ValidationOptions vo;
    vo.tolerance = options.tolerance;
    vo.jobs = options.jobs;
    if (config.present.count("env.seed")) vo.seed = config.env.seed;
    const auto results = run_checks(options.checks, vo);
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        log << format_check_line(r) << "\n    " << r.detail << '\n';
        nlohmann::ordered_json e;
        e["name"] = r.name;
        e["passed"] = r.passed;
        e["measured"] = r.measured;
        e["comparison"] = r.comparison;
        e["threshold"] = r.threshold;
        e["seconds"] = r.seconds;
        e["detail"] = r.detail;
        nlohmann::ordered_json m;
        for (const auto& [k, v] : r.metrics) {
            log << "    " << k << " = " << format_double(v) << '\n';
            m[k] = v;
        }
        e["metrics"] = m;
        j.push_back(e);
    }
    write_file(options.out_dir / "validation_report.json", j.dump(2) + "\n");
    log << (all ? "all checks passed" : "some checks FAILED") << '\n';
    return all ? kExitOk : kExitValidation;
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"Spectrum broadcast structure indicators for quantum Brownian motion"};
    app.require_subcommand(1);
    std::string config_path;
    std::vector<std::string> overrides;
    CommandOptions options;
    std::string out_dir = ".";

    auto common = [&](CLI::App* sub, bool config_required) {
        auto* opt = sub->add_option("--config,-c", config_path, "config file (.json or .toml)");
        if (config_required) opt->required();
        sub->add_option("--out,-o", out_dir, "output directory");
        sub->add_option("--jobs,-j", options.jobs, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--set", overrides, "override a config key, key=value (repeatable)");
    };
    auto* ind = app.add_subcommand("indicators", "write indicators.csv for a sampled environment");
    common(ind, true);
    auto* means = app.add_subcommand("means", "write means_<kind>.csv");
    common(means, true);
    means->add_option("--kind", options.kinds, "LowT_f0 | HighT_Gamma | HighT_B (repeatable)");
    auto* reg = app.add_subcommand("regime", "write regime_report.json");
    common(reg, true);
    auto* val = app.add_subcommand("validate", "run the oracle checks");
    common(val, false);
    val->add_option("--checks", options.checks, "subset of checks to run")->delimiter(',');
    double tol = 0.0;
    auto* tol_opt = val->add_option("--tolerance", tol, "override every error threshold");
    val->add_flag_callback("--list", [] {
        for (const auto& c : validation_checks()) std::cout << c.name << "  " << c.summary << '\n';
        throw CLI::Success();
    }, "list the available checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunConfig config = config_path.empty() ? RunConfig{} : load_config(config_path);
        for (const auto& o : overrides) apply_override(config, o);
        options.out_dir = out_dir;
        if (*tol_opt) options.tolerance = tol;
        if (ind->parsed()) return cmd_indicators(config, options, std::cerr);
        if (means->parsed()) return cmd_means(config, options, std::cerr);
        if (reg->parsed()) return cmd_regime(config, options, std::cout);
        if (val->parsed()) return cmd_validate(config, options, std::cout);
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qbm
