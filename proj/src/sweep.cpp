#include "decarb/sweep.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <thread>

#include "decarb/analysis.hpp"
#include "decarb/errors.hpp"
#include "decarb/expenditure.hpp"
#include "decarb/pathway.hpp"
#include "decarb/units.hpp"

namespace decarb {

namespace {

std::string hash_line(const ScenarioConfig& config) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(serialize_config(config))));
    return std::string("config_hash=0x") + buffer;
}

std::string cell_name(const std::string& output, double goal_pgc, double rate,
                      const std::string& kind) {
    std::string name = output + "_goal" + format_double(goal_pgc) + "_r" + format_double(rate);
    if (!kind.empty()) {
        name += "_" + kind;
    }
    return name;
}

ResultTable flagged_table(std::string name, std::vector<Column> columns,
                          const std::string& hash, const std::string& reason) {
    ResultTable table{std::move(name), std::move(columns), {}, {}};
    std::vector<Cell> row(table.columns.size(), Cell{std::string{}});
    row[0] = std::string("infeasible");
    table.rows.push_back(std::move(row));
    table.footer.push_back(hash);
    table.footer.push_back("error: " + reason);
    return table;
}

std::vector<Column> pathway_columns() {
    return {{"t", "yr"}, {"K", "-"}, {"k", "1/yr"}, {"m", "Gt CO2/yr"}, {"M_cum", "Gt CO2"}};
}

std::vector<Column> expenditure_columns() {
    return {{"t", "yr"},
            {"carbon_price", "billion $/(Gt CO2/yr)"},
            {"p_mu", "billion $/yr"},
            {"p_g", "billion $/yr"},
            {"p_total", "billion $/yr"},
            {"E_discounted", "billion $"}};
}

std::vector<Column> burden_columns() {
    return {{"t", "yr"}, {"exponent", "-"}, {"burden", "-"}};
}

std::vector<Column> cost_curve_columns() {
    return {{"k", "1/yr"}, {"M", "Gt CO2"}, {"E", "billion $"}};
}

std::vector<Column> power_law_columns() {
    return {{"goal", "PgC"}, {"goal", "Gt CO2"}, {"f", "-"}};
}

std::vector<Column> delay_columns() {
    return {{"t", "yr"},
            {"m_qs", "Gt CO2/yr"},
            {"m_ck", "Gt CO2/yr"},
            {"burden_qs", "-"},
            {"burden_ck", "-"}};
}

ResultTable pathway_table(std::string name, const Pathway& pathway,
                          const std::string& hash, double residual, bool solved) {
    ResultTable table{std::move(name), pathway_columns(), {}, {}};
    table.rows.reserve(pathway.grid.size());
    for (std::size_t i = 0; i < pathway.grid.size(); ++i) {
        table.rows.push_back({pathway.grid.time(i), pathway.K[i], pathway.k[i],
                              pathway.m[i], pathway.M_cum[i]});
    }
    table.footer.push_back(hash);
    if (solved) {
        table.footer.push_back("solver_residual_gt=" + format_double(residual));
    }
    return table;
}

ResultTable expenditure_table(std::string name, const Pathway& pathway,
                              const ExpenditureSeries& series, const MacCurve& curve,
                              const std::string& hash) {
    ResultTable table{std::move(name), expenditure_columns(), {}, {}};
    table.rows.reserve(pathway.grid.size());
    for (std::size_t i = 0; i < pathway.grid.size(); ++i) {
        table.rows.push_back({pathway.grid.time(i), carbon_price(pathway.K[i], curve),
                              series.p_mu[i], series.p_g[i],
                              series.p_mu[i] + series.p_g[i],
                              series.discounted_cumulative[i]});
    }
    table.footer.push_back(hash);
    return table;
}

ResultTable burden_table(std::string name, const Pathway& pathway,
                         const ExpenditureSeries& series, const EconomyParams& economy,
                         const MacCurve& curve, const std::string& hash) {
    ResultTable table{std::move(name), burden_columns(), {}, {}};
    table.rows.reserve(pathway.grid.size());
    const double sigma = economy.sigma();
    for (std::size_t i = 0; i < pathway.grid.size(); ++i) {
        const double t = pathway.grid.time(i);
        table.rows.push_back(
            {t, (curve.nu - 1.0) * pathway.K[i] - sigma * t, series.burden[i]});
    }
    table.footer.push_back(hash);
    return table;
}

struct Job {
    std::function<std::vector<ResultTable>()> run;
};

}  // namespace

SweepResult run_sweep(const ScenarioConfig& config, unsigned threads) {
    config.validate();
    const std::string hash = hash_line(config);
    const TimeGrid grid = config.grid();

    const auto has_output = [&](OutputKind kind) {
        return std::find(config.outputs.begin(), config.outputs.end(), kind) !=
               config.outputs.end();
    };

    std::vector<PathwayKind> kinds;
    if (config.pathway_kind == PathwayChoice::quasi_stationary ||
        config.pathway_kind == PathwayChoice::both) {
        kinds.push_back(PathwayKind::quasi_stationary);
    }
    if (config.pathway_kind == PathwayChoice::constant_rate ||
        config.pathway_kind == PathwayChoice::both) {
        kinds.push_back(PathwayKind::constant_rate);
    }

    const bool want_series = has_output(OutputKind::pathway) ||
                             has_output(OutputKind::expenditure) ||
                             has_output(OutputKind::burden);

    std::vector<Job> jobs;
    // Goal-major, then growth rate; per-rate tables follow the cells.
    for (double goal_pgc : config.goals_pgc) {
        for (double rate : config.growth_rates) {
            EconomyParams economy = config.economy;
            economy.r = rate;
            const MacCurve curve = config.curve;
            const double goal_gt = units::pgc_to_gt_co2(goal_pgc);

            if (want_series) {
                for (PathwayKind kind : kinds) {
                    jobs.push_back(Job{[=, &config]() {
                        const std::string kind_name =
                            kind == PathwayKind::quasi_stationary ? "quasi_stationary"
                                                                  : "constant_rate";
                        std::vector<ResultTable> tables;
                        try {
                            double residual = 0.0;
                            const Pathway pathway = [&]() {
                                if (kind == PathwayKind::quasi_stationary) {
                                    const MultiplierSolution sol =
                                        solve_multiplier(goal_gt, grid, economy);
                                    residual = sol.residual;
                                    return quasi_stationary_pathway(sol.c, grid, economy);
                                }
                                const double k = solve_constant_rate(goal_gt, grid, economy);
                                Pathway p = constant_rate_pathway(k, grid, economy);
                                residual = p.M_cum.back() - goal_gt;
                                return p;
                            }();
                            const bool need_series = has_output(OutputKind::expenditure) ||
                                                     has_output(OutputKind::burden);
                            const ExpenditureSeries series =
                                need_series ? discounted_total(pathway, economy, curve)
                                            : ExpenditureSeries{grid, {}, {}, {}, {}};
                            if (has_output(OutputKind::pathway)) {
                                tables.push_back(pathway_table(
                                    cell_name("pathway", goal_pgc, rate, kind_name),
                                    pathway, hash, residual, true));
                            }
                            if (has_output(OutputKind::expenditure)) {
                                tables.push_back(expenditure_table(
                                    cell_name("expenditure", goal_pgc, rate, kind_name),
                                    pathway, series, curve, hash));
                            }
                            if (has_output(OutputKind::burden)) {
                                tables.push_back(burden_table(
                                    cell_name("burden", goal_pgc, rate, kind_name),
                                    pathway, series, economy, curve, hash));
                            }
                        } catch (const InfeasibleGoal& err) {
                            if (has_output(OutputKind::pathway)) {
                                tables.push_back(flagged_table(
                                    cell_name("pathway", goal_pgc, rate, kind_name),
                                    pathway_columns(), hash, err.what()));
                            }
                            if (has_output(OutputKind::expenditure)) {
                                tables.push_back(flagged_table(
                                    cell_name("expenditure", goal_pgc, rate, kind_name),
                                    expenditure_columns(), hash, err.what()));
                            }
                            if (has_output(OutputKind::burden)) {
                                tables.push_back(flagged_table(
                                    cell_name("burden", goal_pgc, rate, kind_name),
                                    burden_columns(), hash, err.what()));
                            }
                        }
                        return tables;
                    }});
                }
            }
            if (has_output(OutputKind::delay)) {
                jobs.push_back(Job{[=]() {
                    std::vector<ResultTable> tables;
                    const std::string name = cell_name("delay", goal_pgc, rate, "");
                    try {
                        const DelayComparison cmp =
                            delay_comparison(goal_gt, grid, economy, curve);
                        ResultTable table{name, delay_columns(), {}, {}};
                        table.rows.reserve(grid.size());
                        for (std::size_t i = 0; i < grid.size(); ++i) {
                            table.rows.push_back({grid.time(i), cmp.quasi_stationary.m[i],
                                                  cmp.constant_rate.m[i],
                                                  cmp.qs_series.burden[i],
                                                  cmp.ck_series.burden[i]});
                        }
                        table.footer.push_back(hash);
                        table.footer.push_back(
                            "present_saving=" + format_double(cmp.present_saving) +
                            ", terminal_gap=" + format_double(cmp.terminal_gap) +
                            ", k_const=" + format_double(cmp.k_const));
                        tables.push_back(std::move(table));
                    } catch (const InfeasibleGoal& err) {
                        tables.push_back(
                            flagged_table(name, delay_columns(), hash, err.what()));
                    }
                    return tables;
                }});
            }
        }
    }
    for (double rate : config.growth_rates) {
        EconomyParams economy = config.economy;
        economy.r = rate;
        const MacCurve curve = config.curve;

        if (has_output(OutputKind::cost_curve)) {
            jobs.push_back(Job{[=, &config]() {
                std::vector<double> ks(config.cost_curve_points);
                for (std::size_t i = 0; i < ks.size(); ++i) {
                    ks[i] = config.cost_curve_k_max * static_cast<double>(i) /
                            static_cast<double>(ks.size() - 1);
                }
                const auto points = cost_curve(ks, grid.horizon(), economy, curve);
                ResultTable table{"cost_curve_r" + format_double(rate),
                                  cost_curve_columns(), {}, {}};
                for (const auto& p : points) {
                    table.rows.push_back({p.k_const, p.M, p.E});
                }
                table.footer.push_back(hash);
                return std::vector<ResultTable>{std::move(table)};
            }});
        }
        if (has_output(OutputKind::power_law)) {
            jobs.push_back(Job{[=, &config]() {
                const std::string name = "power_law_r" + format_double(rate);
                std::vector<ResultTable> tables;
                try {
                    std::vector<double> fractions;
                    fractions.reserve(config.power_law_goals_pgc.size());
                    for (double goal_pgc : config.power_law_goals_pgc) {
                        const double goal_gt = units::pgc_to_gt_co2(goal_pgc);
                        const MultiplierSolution sol =
                            solve_multiplier(goal_gt, grid, economy);
                        const Pathway pathway =
                            quasi_stationary_pathway(sol.c, grid, economy);
                        fractions.push_back(cost_fraction(pathway, economy, curve));
                    }
                    const PowerLawFit fit = fit_power_law_points(
                        config.power_law_goals_pgc, fractions, 1000.0);
                    ResultTable table{name, power_law_columns(), {}, {}};
                    for (std::size_t i = 0; i < fractions.size(); ++i) {
                        table.rows.push_back(
                            {config.power_law_goals_pgc[i],
                             units::pgc_to_gt_co2(config.power_law_goals_pgc[i]),
                             fractions[i]});
                    }
                    table.footer.push_back(hash);
                    table.footer.push_back(
                        "f1=" + format_double(fit.f1) + ", n=" + format_double(fit.n) +
                        ", r_squared=" + format_double(fit.r_squared) +
                        ", m01_pgc=" + format_double(fit.m01_pgc));
                    tables.push_back(std::move(table));
                } catch (const InfeasibleGoal& err) {
                    tables.push_back(
                        flagged_table(name, power_law_columns(), hash, err.what()));
                }
                return tables;
            }});
        }
    }

    // Cells are independent; run them on a fixed stride partition and stitch
    // the results back in job order.
    std::vector<std::vector<ResultTable>> results(jobs.size());
    unsigned worker_count = threads == 0 ? std::thread::hardware_concurrency() : threads;
    worker_count = std::max(1u, std::min<unsigned>(worker_count, jobs.size()));
    if (worker_count == 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            results[i] = jobs[i].run();
        }
    } else {
        std::vector<std::thread> workers;
        workers.reserve(worker_count);
        for (unsigned w = 0; w < worker_count; ++w) {
            workers.emplace_back([&, w]() {
                for (std::size_t i = w; i < jobs.size(); i += worker_count) {
                    results[i] = jobs[i].run();
                }
            });
        }
        for (auto& worker : workers) {
            worker.join();
        }
    }

    SweepResult sweep;
    for (auto& group : results) {
        for (auto& table : group) {
            for (const auto& line : table.footer) {
                if (line.rfind("error: ", 0) == 0) {
                    sweep.errors.push_back(table.name + ": " + line.substr(7));
                }
            }
            sweep.tables.push_back(std::move(table));
        }
    }
    return sweep;
}

}  // namespace decarb
