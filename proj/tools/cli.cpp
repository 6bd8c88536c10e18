#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ginar/errors.hpp"
#include "ginar/mc_harness.hpp"
#include "ginar/mv_test.hpp"
#include "ginar/report.hpp"
#include "ginar/series_io.hpp"

namespace ginar::cli {

namespace {

// Routes output either to the caller's stream or to config.output.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty() && path != "-") {
            file_.open(path);
            if (!file_) throw InputError("cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

ReportFormat report_format(const std::string& format) {
    if (format.empty() || format == "text") return ReportFormat::Text;
    if (format == "json") return ReportFormat::Json;
    throw InputError("unsupported --format '" + format + "' (expected text or json)");
}

std::size_t require_order(const CliConfig& config) {
    const std::size_t p = config.order.value_or(1);
    if (p < 1) throw InputError("--order must be at least 1");
    return p;
}

NullSpec null_for(const CliConfig& config, std::size_t p) {
    NullSpec null;
    if (config.null_spec.empty()) {
        for (std::size_t i = 0; i < p; ++i) null.kappas.push_back(KappaFamily::bernoulli());
        null.kappas.push_back(KappaFamily::poisson());
    } else {
        null.kappas = parse_kappa_list(config.null_spec);
    }
    if (null.kappas.size() != p + 1) {
        throw InputError("--null lists " + std::to_string(null.kappas.size()) + " families but order " +
                         std::to_string(p) + " needs " + std::to_string(p + 1));
    }
    return null;
}

}  // namespace

void cmd_simulate(const CliConfig& config, std::ostream& out) {
    if (config.dists.size() < 2) {
        throw InputError("simulate needs --dist for each thinning lag followed by one for the innovation");
    }
    const std::size_t p = config.order.value_or(config.dists.size() - 1);
    if (config.dists.size() != p + 1) {
        throw InputError("order " + std::to_string(p) + " needs " + std::to_string(p + 1) + " --dist values, got " +
                         std::to_string(config.dists.size()));
    }
    std::vector<CountDistributionSpec> counting;
    for (std::size_t i = 0; i < p; ++i) counting.push_back(parse_distribution(config.dists[i]));
    const CountDistributionSpec innovation = parse_distribution(config.dists.back());
    const GinarModel model(std::move(counting), innovation);
    const CountSeries series = simulate(model, SimConfig{config.length, config.burn_in, config.seed});
    Sink sink(config.output, out);
    write_series(sink.get(), series);
}

void cmd_fit(const CliConfig& config, std::ostream& out) {
    if (config.input.empty()) throw InputError("fit requires --input");
    const ReportFormat format = report_format(config.format);
    const std::size_t p = require_order(config);
    const CountSeries series = ingest_series(config.input);
    const RegressionDesign design = build_regressors(series, p);
    const CLSFit fit = fit_cls(design);
    const MomentMatrices moments = estimate_moment_matrices(design, fit.mu_hat, fit.theta_hat);
    Sink sink(config.output, out);
    write_fit_report(sink.get(), fit, moments, format);
}

void cmd_test(const CliConfig& config, std::ostream& out) {
    if (config.input.empty()) throw InputError("test requires --input");
    const ReportFormat format = report_format(config.format);
    const std::size_t p = require_order(config);
    const NullSpec null = null_for(config, p);
    const CountSeries series = ingest_series(config.input);
    const TestResult result = config.subset.empty()
                                  ? run_test(series, p, null, config.level)
                                  : run_subvector_test(series, p, null, config.subset, config.level);
    Sink sink(config.output, out);
    write_test_report(sink.get(), result, format);
}

void cmd_mc(const CliConfig& config, std::ostream& out) {
    const bool size = config.command == "mc-size";
    ExperimentGrid grid = size ? default_size_grid() : default_power_grid();
    if (!config.config_path.empty()) grid = read_grid_config(config.config_path, grid);
    if (config.replications) grid.replications = *config.replications;
    if (config.seed_given) grid.master_seed = config.seed;

    const std::string format = config.format.empty() ? "csv" : config.format;
    if (format != "csv" && format != "table") {
        throw InputError("unsupported --format '" + format + "' (expected csv or table)");
    }
    const RejectionTable table = size ? run_size_experiment(grid) : run_power_experiment(grid);
    Sink sink(config.output, out);
    if (format == "csv") {
        write_rejection_csv(sink.get(), table);
    } else if (size) {
        write_size_table(sink.get(), table);
    } else {
        write_power_table(sink.get(), table);
    }
    std::size_t failures = 0;
    for (const auto& row : table.rows) failures += row.failures;
    if (failures > 0 && format == "table") sink.get() << "failed replications: " << failures << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulate, fit and test generalized INAR(p) count series"};
    app.require_subcommand(1);
    CliConfig config;
    std::string subset_text;

    auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", config.input, "Series CSV (column `count`)"); };
    auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", config.output, "Output path (default stdout)"); };
    auto add_order = [&](CLI::App* sub) { sub->add_option("--order,-p", config.order, "Autoregressive order p"); };

    auto* simulate_cmd = app.add_subcommand("simulate", "Simulate a GINAR(p) series");
    simulate_cmd->add_option("--dist", config.dists, "Counting specs for lags 1..p, then the innovation")->required();
    add_order(simulate_cmd);
    simulate_cmd->add_option("--length,-n", config.length, "Series length")->capture_default_str();
    simulate_cmd->add_option("--burn-in", config.burn_in, "Discarded initial steps")->capture_default_str();
    simulate_cmd->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    add_output(simulate_cmd);

    auto* fit_cmd = app.add_subcommand("fit", "Conditional least squares fit and moment matrices");
    add_input(fit_cmd);
    add_order(fit_cmd);
    fit_cmd->add_option("--format", config.format, "text or json");
    add_output(fit_cmd);

    auto* test_cmd = app.add_subcommand("test", "Mean-variance test of the counting and innovation laws");
    add_input(test_cmd);
    add_order(test_cmd);
    test_cmd->add_option("--null", config.null_spec, "Kappa families, e.g. bernoulli,poisson");
    test_cmd->add_option("--level", config.level, "Significance level")->capture_default_str();
    test_cmd->add_option("--subset", subset_text, "Tested components, 1-based, e.g. 1 or 1,2");
    test_cmd->add_option("--format", config.format, "text or json");
    add_output(test_cmd);

    std::vector<CLI::App*> mc_cmds = {app.add_subcommand("mc-size", "Empirical size over the null grid"),
                                      app.add_subcommand("mc-power", "Empirical power over the alternative grid")};
    for (auto* sub : mc_cmds) {
        sub->add_option("--config", config.config_path, "Grid config (key = value lines)");
        sub->add_option("--replications,-R", config.replications, "Override replications");
        sub->add_option("--seed", config.seed, "Override master seed")->each([&](const std::string&) {
            config.seed_given = true;
        });
        sub->add_option("--format", config.format, "csv or table");
        add_output(sub);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    for (auto* sub : app.get_subcommands()) config.command = sub->get_name();

    try {
        if (!subset_text.empty()) {
            std::stringstream ss(subset_text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                std::size_t used = 0;
                long long v = -1;
                try {
                    v = std::stoll(item, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used == 0 || used != item.size() || v < 1) throw InputError("invalid --subset entry '" + item + "'");
                config.subset.push_back(static_cast<std::size_t>(v));
            }
        }
        if (config.command == "simulate") {
            cmd_simulate(config, out);
        } else if (config.command == "fit") {
            cmd_fit(config, out);
        } else if (config.command == "test") {
            cmd_test(config, out);
        } else {
            cmd_mc(config, out);
        }
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::domain_error& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::invalid_argument& e) {
        err << "input error: " << e.what() << '\n';
        return kInputError;
    }
    return kSuccess;
}

}  // namespace ginar::cli
