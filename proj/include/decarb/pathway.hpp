#pragma once

#include <span>
#include <vector>

#include "decarb/economy.hpp"
#include "decarb/mac.hpp"

namespace decarb {

enum class PathwayKind { quasi_stationary, constant_rate, custom };

// A decarbonization trajectory on a uniform grid.  K is the integrated
// decarbonization rate (K[0] = 0), k its rate, m the implied emissions and
// M_cum their running Simpson integral.
struct Pathway {
    TimeGrid grid;
    std::vector<double> K;      // dimensionless
    std::vector<double> k;      // 1/yr
    std::vector<double> m;      // Gt CO2/yr
    std::vector<double> M_cum;  // Gt CO2
    PathwayKind kind = PathwayKind::custom;
    // True when the closed-form shape is reused outside the sigma=0, delta=0
    // regime where it is an actual stationarity solution.
    bool heuristic_sigma = false;
};

struct MultiplierSolution {
    double c = 0.0;             // lambda1 mu0 / lambda2, 1 / trillion $
    double lambda_ratio = 0.0;  // lambda1 / lambda2 = c / mu0, 1 / (trillion $ Gt CO2^-1)
    double residual = 0.0;      // constraint residual, Gt CO2
};

// K(t) = ln(1 + c G(t)), k(t) = c g(t) / (1 + c G(t)).  c = 0 reproduces
// business as usual.  Flagged heuristic when sigma > 0 or delta > 0.
Pathway quasi_stationary_pathway(double c, const TimeGrid& grid,
                                 const EconomyParams& economy);

// K(t) = k t.
Pathway constant_rate_pathway(double k_const, const TimeGrid& grid,
                              const EconomyParams& economy);

// Custom pathway from a per-node rate series; K is built by the running
// trapezoid rule, so rate/integral consistency is exact by construction.
Pathway pathway_from_rates(std::span<const double> rates, const TimeGrid& grid,
                           const EconomyParams& economy);

// Cumulative emissions with no deliberate mitigation (K = 0).
double bau_cumulative_emissions(const TimeGrid& grid, const EconomyParams& economy);

// Finds c > 0 such that the quasi-stationary pathway meets goal_gt over the
// grid horizon; M(c) is strictly decreasing in c.  Residual tolerance is
// max(1e-9 * goal, 1e-6 Gt).  Throws InfeasibleGoal when the goal is at or
// above business as usual or needs c beyond 1e9 per trillion $.
MultiplierSolution solve_multiplier(double goal_gt, const TimeGrid& grid,
                                    const EconomyParams& economy);

// Root of m0 (1 - e^{-chi T})/chi = goal_gt in k, chi = k + sigma - r.
double solve_constant_rate(double goal_gt, const TimeGrid& grid,
                           const EconomyParams& economy);

// Max over grid prefixes of |K_i - trapezoid(k)_i|; diagnostic used by tests.
double max_rate_integral_mismatch(const Pathway& pathway);

struct OdeSolution {
    std::vector<double> x;   // node values, truncated after a non-positive x
    bool truncated = false;  // integration left the economically meaningful region
};

// Classical RK4 for x' = (lambda1 mu0/lambda2) e^{-sigma t} g(t)
//                      - ((delta+sigma) alpha mu0/lambda2) e^{-(delta+sigma) t} g(t) x^nu
// with x(0) = 1.  `gamma` is the regularization decay rate; it is accepted
// for interface completeness but the e^{-gamma t} terms are neglected
// (gamma t >> 1 regime), so it does not enter the integration.
OdeSolution integrate_el_ode(double lambda1, double lambda2, double gamma,
                             const EconomyParams& economy, const MacCurve& curve,
                             const TimeGrid& grid);

struct PerturbationSeries {
    std::vector<double> x0;            // 1 + (lambda1 mu0/lambda2) N(t)
    std::vector<double> x1;            // first-order coefficient, years
    std::vector<double> x_simplified;  // 1 + (mu0/lambda2)(lambda1 - sigma alpha) N(t)
    bool sigma_warning = false;        // sigma > 0.05: expansion parameter not small
};

// First-order expansion of the evolution equation in sigma (delta = 0), with
// N(t) = \int_0^t e^{-sigma s} g(s) ds.  The lambda1 -> 0 limit of x1 is
// -(alpha mu0/lambda2) N(t).
PerturbationSeries small_sigma_expansion(double lambda1, double lambda2,
                                         const EconomyParams& economy,
                                         const MacCurve& curve, const TimeGrid& grid);

}  // namespace decarb
