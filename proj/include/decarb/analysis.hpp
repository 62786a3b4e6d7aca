#pragma once

#include <span>
#include <vector>

#include "decarb/economy.hpp"
#include "decarb/expenditure.hpp"
#include "decarb/mac.hpp"
#include "decarb/pathway.hpp"

namespace decarb {

struct CostCurvePoint {
    double k_const;  // 1/yr
    double M;        // cumulative emissions at T, Gt CO2
    double E;        // discounted expenditure at T, billion $
};

// One point per constant rate: M from the closed form m0(1-e^{-chi T})/chi
// (chi = k + sigma - r), E from constant_k_closed_form.  k_values must be
// non-negative and ascending.
std::vector<CostCurvePoint> cost_curve(std::span<const double> k_values, double T,
                                       const EconomyParams& economy,
                                       const MacCurve& curve);

// Long-horizon expenditure-vs-cumulative-emissions approximation
//   E ~ alpha mu0 g0 (e^{(r-rho)T}-1)/(r-rho) (m0/M + r nu/(nu-1) - sigma),
// valid only where the growth of mitigation effort is negligible against
// discounting; see the cost-curve tests for its actual reach.
double long_horizon_approx(double M, double T, const EconomyParams& economy,
                           const MacCurve& curve);

// f = \int e^{-delta s}(P_mu+P_g) ds / \int e^{-delta s} g ds, dimensionless.
double cost_fraction(const Pathway& pathway, const EconomyParams& economy,
                     const MacCurve& curve);

struct PowerLawFit {
    double f1 = 0.0;        // cost fraction at the reference goal
    double n = 0.0;         // decay exponent of f with the goal
    double m01_pgc = 1000.0;  // reference goal, PgC
    double r_squared = 0.0;
};

// Pure log-log regression of cost fractions on goals (exposed for testing
// and reused by fit_power_law).
PowerLawFit fit_power_law_points(std::span<const double> goals_pgc,
                                 std::span<const double> fractions,
                                 double m01_pgc = 1000.0);

// Solves the quasi-stationary pathway for each goal at discount rate delta
// (overriding economy.delta), computes cost fractions, and fits
// f = f1 (M0/M01)^{-n} with M01 = 1000 PgC.  Requires >= 3 goals, all
// positive and <= 1000 PgC (the power law's validity range); propagates
// solver infeasibility.
PowerLawFit fit_power_law(std::span<const double> goals_pgc, const TimeGrid& grid,
                          const EconomyParams& economy, const MacCurve& curve,
                          double delta);

struct DelayComparison {
    Pathway quasi_stationary;
    Pathway constant_rate;
    ExpenditureSeries qs_series;
    ExpenditureSeries ck_series;
    double k_const = 0.0;         // solved constant rate, 1/yr
    double present_saving = 0.0;  // b_qs(0) - b_ck(0)
    double terminal_gap = 0.0;    // b_ck(T) - b_qs(T)
};

// Builds both pathway kinds for the same goal and compares their burden
// series.  Propagates infeasibility from either solver.
DelayComparison delay_comparison(double goal_gt, const TimeGrid& grid,
                                 const EconomyParams& economy,
                                 const MacCurve& curve);

// warming = baseline + tcre * M0 / 1000, with M0 in PgC and tcre in K per
// 1000 PgC.  Throws std::domain_error for M0 < 0 or tcre <= 0.
double warming_from_goal(double goal_pgc, double tcre, double baseline_warming);

}  // namespace decarb
