#include "decarb/pathway.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "decarb/errors.hpp"
#include "decarb/numeric.hpp"
#include "decarb/table.hpp"

namespace decarb {

namespace {

void fill_emissions(Pathway& pathway, const EconomyParams& economy) {
    const std::size_t n = pathway.grid.size();
    pathway.m.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        pathway.m[i] = emissions(pathway.grid.time(i), pathway.K[i], economy);
    }
    pathway.M_cum = num::cumulative_integral(pathway.m, pathway.grid.step());
}

// Quasi-stationary cumulative emissions as a function of the multiplier
// ratio, evaluated with the same quadrature the pathways use.
double quasi_stationary_cumulative(double c, const TimeGrid& grid,
                                   const EconomyParams& economy) {
    const std::size_t n = grid.size();
    std::vector<double> m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const double K = std::log1p(c * integrated_ggdp(t, economy));
        m[i] = emissions(t, K, economy);
    }
    return num::integrate(m, grid.step());
}

double constant_rate_cumulative_closed_form(double k, const TimeGrid& grid,
                                            const EconomyParams& economy) {
    const double chi = k + economy.sigma() - economy.r;
    const double T = grid.horizon();
    return economy.m0() * T * num::expm1_over_x(-chi * T);
}

}  // namespace

Pathway quasi_stationary_pathway(double c, const TimeGrid& grid,
                                 const EconomyParams& economy) {
    if (!(c >= 0.0)) {
        throw std::invalid_argument("quasi_stationary_pathway: c must be non-negative");
    }
    Pathway pathway{grid, {}, {}, {}, {}, PathwayKind::quasi_stationary,
                    economy.sigma() > 0.0 || economy.delta > 0.0};
    const std::size_t n = grid.size();
    pathway.K.resize(n);
    pathway.k.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const double G = integrated_ggdp(t, economy);
        pathway.K[i] = std::log1p(c * G);
        pathway.k[i] = c * ggdp(t, economy) / (1.0 + c * G);
    }
    fill_emissions(pathway, economy);
    return pathway;
}

Pathway constant_rate_pathway(double k_const, const TimeGrid& grid,
                              const EconomyParams& economy) {
    if (!(k_const >= 0.0)) {
        throw std::invalid_argument("constant_rate_pathway: k must be non-negative");
    }
    Pathway pathway{grid, {}, {}, {}, {}, PathwayKind::constant_rate, false};
    const std::size_t n = grid.size();
    pathway.K.resize(n);
    pathway.k.assign(n, k_const);
    for (std::size_t i = 0; i < n; ++i) {
        pathway.K[i] = k_const * grid.time(i);
    }
    fill_emissions(pathway, economy);
    return pathway;
}

Pathway pathway_from_rates(std::span<const double> rates, const TimeGrid& grid,
                           const EconomyParams& economy) {
    const std::size_t n = grid.size();
    if (rates.size() != n) {
        throw std::invalid_argument("pathway_from_rates: rate series does not match the grid");
    }
    Pathway pathway{grid, {}, {}, {}, {}, PathwayKind::custom, false};
    pathway.k.assign(rates.begin(), rates.end());
    pathway.K.resize(n);
    pathway.K[0] = 0.0;
    const double h = grid.step();
    for (std::size_t i = 1; i < n; ++i) {
        pathway.K[i] = pathway.K[i - 1] + 0.5 * h * (rates[i - 1] + rates[i]);
    }
    fill_emissions(pathway, economy);
    return pathway;
}

double bau_cumulative_emissions(const TimeGrid& grid, const EconomyParams& economy) {
    return quasi_stationary_cumulative(0.0, grid, economy);
}

double max_rate_integral_mismatch(const Pathway& pathway) {
    const std::size_t n = pathway.grid.size();
    const double h = pathway.grid.step();
    double running = 0.0;
    double worst = std::abs(pathway.K[0]);
    for (std::size_t i = 1; i < n; ++i) {
        running += 0.5 * h * (pathway.k[i - 1] + pathway.k[i]);
        worst = std::max(worst, std::abs(pathway.K[i] - running));
    }
    return worst;
}

MultiplierSolution solve_multiplier(double goal_gt, const TimeGrid& grid,
                                    const EconomyParams& economy) {
    if (!(goal_gt > 0.0)) {
        throw std::invalid_argument("solve_multiplier: goal must be positive");
    }
    const double bau = bau_cumulative_emissions(grid, economy);
    if (goal_gt >= bau) {
        throw InfeasibleGoal("goal of " + format_double(goal_gt) +
                             " Gt is at or above the business-as-usual cumulative " +
                             format_double(bau) + " Gt; no mitigation is needed");
    }
    const double tolerance = std::max(1e-9 * goal_gt, 1e-6);

    const auto objective = [&](double c) {
        return quasi_stationary_cumulative(c, grid, economy) - goal_gt;
    };

    double c_lo = 1e-12;
    const double f_lo = objective(c_lo);
    if (f_lo <= 0.0) {
        // The root sits below the multiplier floor; accept only if the floor
        // already meets the constraint tolerance.
        if (std::abs(f_lo) <= tolerance) {
            return {c_lo, c_lo / economy.mu0, f_lo};
        }
        throw InfeasibleGoal("goal of " + format_double(goal_gt) +
                             " Gt is indistinguishable from business as usual at the "
                             "multiplier floor 1e-12");
    }

    constexpr double c_max = 1e9;
    double c_hi = 1e-6;
    double f_hi = objective(c_hi);
    while (f_hi > 0.0) {
        c_lo = c_hi;
        c_hi *= 10.0;
        if (c_hi > c_max) {
            throw InfeasibleGoal("goal of " + format_double(goal_gt) +
                                 " Gt is not reachable with a multiplier ratio below 1e9");
        }
        f_hi = objective(c_hi);
    }

    const num::RootResult root = num::find_root_brent(objective, c_lo, c_hi, tolerance, 200);
    if (std::abs(root.residual) > tolerance) {
        throw SolverFailure("solve_multiplier: residual " + format_double(root.residual) +
                            " Gt exceeds tolerance after " + std::to_string(root.iterations) +
                            " iterations");
    }
    return {root.x, root.x / economy.mu0, root.residual};
}

double solve_constant_rate(double goal_gt, const TimeGrid& grid,
                           const EconomyParams& economy) {
    if (!(goal_gt > 0.0)) {
        throw std::invalid_argument("solve_constant_rate: goal must be positive");
    }
    const auto objective = [&](double k) {
        return constant_rate_cumulative_closed_form(k, grid, economy) - goal_gt;
    };
    const double at_zero = objective(0.0);
    if (std::abs(at_zero) <= 1e-6) {
        return 0.0;  // goal coincides with business as usual
    }
    if (at_zero < 0.0) {
        throw InfeasibleGoal("goal of " + format_double(goal_gt) +
                             " Gt is above the business-as-usual cumulative; no "
                             "mitigation is needed");
    }
    double k_hi = 0.25;
    while (objective(k_hi) > 0.0) {
        k_hi *= 2.0;
        if (k_hi > 1e3) {
            throw InfeasibleGoal("goal of " + format_double(goal_gt) +
                                 " Gt is not reachable with a bounded constant rate");
        }
    }
    const num::RootResult root = num::find_root_brent(objective, 0.0, k_hi, 1e-9, 200);
    if (std::abs(root.residual) > 1e-6) {
        throw SolverFailure("solve_constant_rate: residual " + format_double(root.residual) +
                            " Gt exceeds tolerance");
    }
    return root.x;
}

OdeSolution integrate_el_ode(double lambda1, double lambda2, double gamma,
                             const EconomyParams& economy, const MacCurve& curve,
                             const TimeGrid& grid) {
    (void)gamma;  // e^{-gamma t} terms are neglected against 1
    if (!(lambda2 > 0.0)) {
        throw std::invalid_argument("integrate_el_ode: lambda2 must be positive");
    }
    const double sigma = economy.sigma();
    const double rho = economy.rho();
    const double c1 = lambda1 * economy.mu0 / lambda2;          // 1 / trillion $
    const double c2 = rho * curve.alpha * curve.mu0 / lambda2;  // 1 / trillion $

    const auto rhs = [&](double t, double x) {
        const double g = ggdp(t, economy);
        return c1 * std::exp(-sigma * t) * g -
               c2 * std::exp(-rho * t) * g * std::pow(x, curve.nu);
    };

    OdeSolution solution;
    solution.x.reserve(grid.size());
    solution.x.push_back(1.0);
    const double h = grid.step();
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double t = grid.time(i);
        const double x = solution.x.back();
        const double k1 = rhs(t, x);
        const double k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1);
        const double k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2);
        const double k4 = rhs(t + h, x + h * k3);
        const double next = x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!(next > 0.0) || !std::isfinite(next)) {
            solution.truncated = true;
            break;
        }
        solution.x.push_back(next);
    }
    return solution;
}

PerturbationSeries small_sigma_expansion(double lambda1, double lambda2,
                                         const EconomyParams& economy,
                                         const MacCurve& curve, const TimeGrid& grid) {
    if (!(lambda2 > 0.0)) {
        throw std::invalid_argument("small_sigma_expansion: lambda2 must be positive");
    }
    const double sigma = economy.sigma();
    const double beta_raw = curve.alpha * curve.mu0;  // billion $ yr / trillion $
    const double d = economy.r - sigma;
    const double scale = lambda1 * economy.mu0 / lambda2;  // 1 / trillion $

    PerturbationSeries series;
    series.sigma_warning = sigma > 0.05;
    const std::size_t n = grid.size();
    series.x0.resize(n);
    series.x1.resize(n);
    series.x_simplified.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const double N = economy.g0 * t * num::expm1_over_x(d * t);  // trillion $
        const double u = scale * N;
        series.x0[i] = 1.0 + u;
        // phi(u) = ((1+u)^{nu+1} - 1) / ((nu+1) u), phi(0) = 1; keeps the
        // lambda1 -> 0 limit x1 = -(alpha mu0/lambda2) N exact.
        double phi;
        if (std::abs(u) < 1e-8) {
            phi = 1.0 + 0.5 * curve.nu * u;
        } else {
            phi = std::expm1((curve.nu + 1.0) * std::log1p(u)) / ((curve.nu + 1.0) * u);
        }
        series.x1[i] = -(beta_raw / lambda2) * N * phi;
        series.x_simplified[i] =
            1.0 + (economy.mu0 / lambda2) * (lambda1 - sigma * curve.alpha) * N;
    }
    return series;
}

}  // namespace decarb
