// decarb: scenario CLI for decarbonization pathways, expenditures and
// cost-vs-goal analyses.  All numeric output goes to CSV files; exit code 0
// on success, 2 on usage/config errors, 3 on runtime failures, with a
// machine-readable JSON summary on stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "decarb/analysis.hpp"
#include "decarb/config.hpp"
#include "decarb/errors.hpp"
#include "decarb/mac.hpp"
#include "decarb/sweep.hpp"
#include "decarb/table.hpp"
#include "decarb/units.hpp"

namespace fs = std::filesystem;

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    std::string format = "csv";
    unsigned threads = 1;
};

decarb::ScenarioConfig load_or_default(const CommonOptions& opts) {
    if (opts.config_path.empty()) {
        decarb::ScenarioConfig config;
        config.validate();
        return config;
    }
    return decarb::load_config(opts.config_path);
}

void check_format(const CommonOptions& opts) {
    if (opts.format != "csv") {
        throw std::invalid_argument("unsupported output format '" + opts.format + "'");
    }
}

fs::path prepare_out_dir(const CommonOptions& opts) {
    if (opts.out_dir.empty()) {
        throw std::invalid_argument("--out directory is required");
    }
    fs::path dir(opts.out_dir);
    fs::create_directories(dir);
    return dir;
}

void write_tables(const decarb::SweepResult& result, const fs::path& dir) {
    for (const auto& table : result.tables) {
        const fs::path path = dir / (table.name + ".csv");
        decarb::write_csv(table, path);
        std::cout << path.string() << '\n';
    }
    for (const auto& error : result.errors) {
        std::cerr << "warning: " << error << '\n';
    }
}

void run_outputs(const CommonOptions& opts, decarb::ScenarioConfig config,
                 std::vector<decarb::OutputKind> outputs) {
    check_format(opts);
    config.outputs = std::move(outputs);
    const fs::path dir = prepare_out_dir(opts);
    write_tables(decarb::run_sweep(config, opts.threads), dir);
}

std::vector<decarb::MacDataPoint> read_mac_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open data file '" + path + "'");
    }
    std::vector<decarb::MacDataPoint> points;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        for (char& ch : line) {
            if (ch == ',' || ch == '\t') {
                ch = ' ';
            }
        }
        std::istringstream row(line);
        double reduction = 0.0;
        double cost = 0.0;
        if (!(row >> reduction)) {
            continue;  // blank line
        }
        if (!(row >> cost)) {
            throw std::invalid_argument("data line " + std::to_string(line_no) +
                                        ": expected two columns (reduction, cost)");
        }
        points.push_back({reduction, cost});
    }
    return points;
}

int run_fit_mac(const CommonOptions& opts, const std::string& data_path,
                double reference_override) {
    check_format(opts);
    const decarb::ScenarioConfig config = load_or_default(opts);
    const auto points = read_mac_points(data_path);
    const double reference = reference_override > 0.0
                                 ? reference_override
                                 : config.mac_reference_growth * config.economy.m0();
    const decarb::MacFit fit = decarb::fit_mac(points, reference, config.economy.mu0);

    std::cout << "fitted alpha = " << decarb::format_double(fit.curve.alpha)
              << " +- " << decarb::format_double(fit.alpha_stderr)
              << " billion $/(Gt CO2/yr)\n"
              << "fitted nu    = " << decarb::format_double(fit.curve.nu) << " +- "
              << decarb::format_double(fit.nu_stderr) << "\n"
              << "residual se  = " << decarb::format_double(fit.residual_stderr)
              << " (log space), n = " << fit.n_points << "\n"
              << "reference    = " << decarb::format_double(reference) << " Gt CO2/yr\n";

    if (!opts.out_dir.empty()) {
        const fs::path dir = prepare_out_dir(opts);
        decarb::ResultTable table{
            "mac_fit",
            {{"alpha", "billion $/(Gt CO2/yr)"},
             {"alpha_stderr", "billion $/(Gt CO2/yr)"},
             {"nu", "-"},
             {"nu_stderr", "-"},
             {"residual_stderr", "log space"},
             {"reference_emissions", "Gt CO2/yr"},
             {"n_points", "-"}},
            {},
            {}};
        table.rows.push_back({fit.curve.alpha, fit.alpha_stderr, fit.curve.nu,
                              fit.nu_stderr, fit.residual_stderr, reference,
                              static_cast<double>(fit.n_points)});
        const fs::path path = dir / "mac_fit.csv";
        decarb::write_csv(table, path);
        std::cout << path.string() << '\n';
    }
    return 0;
}

void add_common(CLI::App* cmd, CommonOptions& opts, bool needs_out) {
    cmd->add_option("--config", opts.config_path, "scenario config file");
    auto* out = cmd->add_option("--out", opts.out_dir, "output directory for CSV files");
    if (needs_out) {
        out->required();
    }
    cmd->add_option("--format", opts.format, "output format (csv)");
    cmd->add_option("--threads", opts.threads, "worker threads for sweep cells");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decarbonization expenditure scenarios"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string data_path;
    double reference_override = 0.0;

    auto* fit_cmd = app.add_subcommand("fit-mac", "fit a MAC curve from cost data");
    fit_cmd->add_option("--data", data_path, "two-column data file (reduction, cost)")
        ->required();
    fit_cmd
        ->add_option("--reference", reference_override,
                     "reference emissions, Gt CO2/yr (default: reference_growth * m0)")
        ->check(CLI::PositiveNumber);
    add_common(fit_cmd, opts, false);

    auto* pathway_cmd = app.add_subcommand("pathway", "solved pathways per goal and rate");
    add_common(pathway_cmd, opts, true);
    auto* sweep_cmd = app.add_subcommand("sweep", "all outputs requested by the config");
    add_common(sweep_cmd, opts, true);
    auto* cost_cmd = app.add_subcommand("cost-curve", "expenditure vs cumulative emissions");
    add_common(cost_cmd, opts, true);
    auto* power_cmd = app.add_subcommand("power-law", "cost fraction vs goal power law");
    add_common(power_cmd, opts, true);
    auto* delay_cmd = app.add_subcommand("delay", "early vs constant-rate burden comparison");
    add_common(delay_cmd, opts, true);

    CLI11_PARSE(app, argc, argv);

    const auto fail = [](const char* kind, const std::exception& err, int code) {
        nlohmann::json summary = {{"error", kind}, {"message", err.what()}};
        std::cerr << summary.dump() << '\n';
        return code;
    };

    try {
        if (fit_cmd->parsed()) {
            return run_fit_mac(opts, data_path, reference_override);
        }
        const decarb::ScenarioConfig config = load_or_default(opts);
        if (pathway_cmd->parsed()) {
            run_outputs(opts, config, {decarb::OutputKind::pathway});
        } else if (sweep_cmd->parsed()) {
            run_outputs(opts, config, config.outputs);
        } else if (cost_cmd->parsed()) {
            run_outputs(opts, config, {decarb::OutputKind::cost_curve});
        } else if (power_cmd->parsed()) {
            run_outputs(opts, config, {decarb::OutputKind::power_law});
        } else if (delay_cmd->parsed()) {
            run_outputs(opts, config, {decarb::OutputKind::delay});
        }
        return 0;
    } catch (const decarb::InfeasibleGoal& err) {
        return fail("infeasible_goal", err, 3);
    } catch (const decarb::SolverFailure& err) {
        return fail("solver_failure", err, 3);
    } catch (const std::invalid_argument& err) {
        return fail("invalid_config", err, 2);
    } catch (const std::exception& err) {
        return fail("runtime", err, 3);
    }
}
