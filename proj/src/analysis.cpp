#include "decarb/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "decarb/errors.hpp"
#include "decarb/numeric.hpp"
#include "decarb/units.hpp"

namespace decarb {

std::vector<CostCurvePoint> cost_curve(std::span<const double> k_values, double T,
                                       const EconomyParams& economy,
                                       const MacCurve& curve) {
    std::vector<CostCurvePoint> points;
    points.reserve(k_values.size());
    double previous = -1.0;
    for (double k : k_values) {
        if (!(k >= 0.0)) {
            throw std::invalid_argument("cost_curve: rates must be non-negative");
        }
        if (k <= previous) {
            throw std::invalid_argument("cost_curve: rates must be strictly ascending");
        }
        previous = k;
        const double chi = k + economy.sigma() - economy.r;
        const double M = economy.m0() * T * num::expm1_over_x(-chi * T);
        const double E = constant_k_closed_form(k, T, economy, curve).total();
        points.push_back({k, M, E});
    }
    return points;
}

double long_horizon_approx(double M, double T, const EconomyParams& economy,
                           const MacCurve& curve) {
    const double b = economy.r - economy.rho();
    return curve.alpha * curve.mu0 * economy.g0 * T * num::expm1_over_x(b * T) *
           (economy.m0() / M + economy.r * curve.nu / (curve.nu - 1.0) - economy.sigma());
}

double cost_fraction(const Pathway& pathway, const EconomyParams& economy,
                     const MacCurve& curve) {
    const std::size_t n = pathway.grid.size();
    if (pathway.K.size() != n || pathway.k.size() != n) {
        throw std::invalid_argument("cost_fraction: pathway series do not match its grid");
    }
    std::vector<double> spending(n);   // billion $/yr, discounted
    std::vector<double> income(n);     // trillion $/yr, discounted
    for (std::size_t i = 0; i < n; ++i) {
        const double t = pathway.grid.time(i);
        const double w = std::exp(-economy.delta * t);
        spending[i] = w * (annual_intensity_expenditure(t, pathway.K[i], pathway.k[i],
                                                        economy, curve) +
                           annual_expansion_expenditure(t, pathway.K[i], economy, curve));
        income[i] = w * ggdp(t, economy);
    }
    const double numerator = num::integrate(spending, pathway.grid.step());
    const double denominator =
        num::integrate(income, pathway.grid.step()) * units::billion_per_trillion;
    return numerator / denominator;
}

PowerLawFit fit_power_law_points(std::span<const double> goals_pgc,
                                 std::span<const double> fractions, double m01_pgc) {
    if (goals_pgc.size() != fractions.size()) {
        throw std::invalid_argument("fit_power_law_points: size mismatch");
    }
    std::vector<double> x;
    std::vector<double> y;
    x.reserve(goals_pgc.size());
    y.reserve(goals_pgc.size());
    for (std::size_t i = 0; i < goals_pgc.size(); ++i) {
        if (!(goals_pgc[i] > 0.0 && fractions[i] > 0.0)) {
            throw std::invalid_argument("fit_power_law_points: goals and fractions must be positive");
        }
        x.push_back(std::log(goals_pgc[i] / m01_pgc));
        y.push_back(std::log(fractions[i]));
    }
    const num::LinearFit line = num::fit_line(x, y);
    PowerLawFit fit;
    fit.f1 = std::exp(line.intercept);
    fit.n = -line.slope;
    fit.m01_pgc = m01_pgc;
    fit.r_squared = line.r_squared;
    return fit;
}

PowerLawFit fit_power_law(std::span<const double> goals_pgc, const TimeGrid& grid,
                          const EconomyParams& economy, const MacCurve& curve,
                          double delta) {
    if (goals_pgc.size() < 3) {
        throw std::invalid_argument("fit_power_law: need at least three goals");
    }
    EconomyParams econ = economy;
    econ.delta = delta;
    econ.validate();

    std::vector<double> fractions;
    fractions.reserve(goals_pgc.size());
    for (double goal_pgc : goals_pgc) {
        if (!(goal_pgc > 0.0 && goal_pgc <= 1000.0)) {
            throw std::invalid_argument(
                "fit_power_law: goals must lie in (0, 1000] PgC, got " +
                std::to_string(goal_pgc));
        }
        const double goal_gt = units::pgc_to_gt_co2(goal_pgc);
        const MultiplierSolution solution = solve_multiplier(goal_gt, grid, econ);
        const Pathway pathway = quasi_stationary_pathway(solution.c, grid, econ);
        fractions.push_back(cost_fraction(pathway, econ, curve));
    }
    return fit_power_law_points(goals_pgc, fractions, 1000.0);
}

DelayComparison delay_comparison(double goal_gt, const TimeGrid& grid,
                                 const EconomyParams& economy, const MacCurve& curve) {
    const MultiplierSolution solution = solve_multiplier(goal_gt, grid, economy);
    Pathway qs = quasi_stationary_pathway(solution.c, grid, economy);
    const double k_const = solve_constant_rate(goal_gt, grid, economy);
    Pathway ck = constant_rate_pathway(k_const, grid, economy);
    ExpenditureSeries qs_series = discounted_total(qs, economy, curve);
    ExpenditureSeries ck_series = discounted_total(ck, economy, curve);
    const double present_saving = qs_series.burden.front() - ck_series.burden.front();
    const double terminal_gap = ck_series.burden.back() - qs_series.burden.back();
    return {std::move(qs),        std::move(ck), std::move(qs_series),
            std::move(ck_series), k_const,       present_saving,
            terminal_gap};
}

double warming_from_goal(double goal_pgc, double tcre, double baseline_warming) {
    if (!(goal_pgc >= 0.0)) {
        throw std::domain_error("warming_from_goal: goal must be non-negative");
    }
    if (!(tcre > 0.0)) {
        throw std::domain_error("warming_from_goal: tcre must be positive");
    }
    return baseline_warming + tcre * goal_pgc / 1000.0;
}

}  // namespace decarb
