#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "decarb/errors.hpp"
#include "decarb/expenditure.hpp"
#include "decarb/pathway.hpp"
#include "decarb/units.hpp"

using namespace decarb;

namespace {

EconomyParams sigma_zero_economy(double r = 0.024) {
    EconomyParams economy;
    economy.r = r;
    economy.theta = 1.0;
    return economy;
}

}  // namespace

TEST_CASE("quasi-stationary pathway at c -> 0 reproduces business as usual") {
    EconomyParams economy;
    const TimeGrid grid(100.0, 0.05);
    const Pathway pathway = quasi_stationary_pathway(0.0, grid, economy);
    for (std::size_t i = 0; i < grid.size(); i += 400) {
        CHECK(pathway.K[i] == 0.0);
        CHECK(pathway.m[i] ==
              doctest::Approx(emissions(grid.time(i), 0.0, economy)).epsilon(1e-14));
    }
    CHECK(pathway.M_cum.back() ==
          doctest::Approx(bau_cumulative_emissions(grid, economy)).epsilon(1e-14));
    CHECK(pathway.kind == PathwayKind::quasi_stationary);
    CHECK(pathway.heuristic_sigma);  // sigma > 0 for the default economy
}

TEST_CASE("heuristic flag stays off only for sigma = 0 and delta = 0") {
    const TimeGrid grid(10.0, 0.1);
    CHECK_FALSE(quasi_stationary_pathway(0.01, grid, sigma_zero_economy()).heuristic_sigma);
    EconomyParams discounted = sigma_zero_economy();
    discounted.delta = 0.03;
    CHECK(quasi_stationary_pathway(0.01, grid, discounted).heuristic_sigma);
}

TEST_CASE("sigma = 0: decarbonization rate proportional to emissions") {
    const EconomyParams economy = sigma_zero_economy();
    const TimeGrid grid(100.0, 0.05);
    const double c = 0.0017;
    const Pathway pathway = quasi_stationary_pathway(c, grid, economy);

    const double expected_ratio = c / economy.mu0;
    double lo = 1e300;
    double hi = -1e300;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double ratio = pathway.k[i] / pathway.m[i];
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    CHECK((hi - lo) / expected_ratio < 1e-10);
    CHECK(hi == doctest::Approx(expected_ratio).epsilon(1e-12));
}

TEST_CASE("sigma = 0: cumulative emissions proportional to K") {
    const EconomyParams economy = sigma_zero_economy();
    const TimeGrid grid(100.0, 0.05);
    const double c = 0.0017;
    const Pathway pathway = quasi_stationary_pathway(c, grid, economy);
    for (std::size_t i = 1; i < grid.size(); i += 97) {
        const double predicted = economy.mu0 / c * pathway.K[i];
        CHECK(std::abs(pathway.M_cum[i] - predicted) / predicted < 1e-8);
    }
}

TEST_CASE("pathway initial condition and rate/integral consistency") {
    const EconomyParams economy = sigma_zero_economy();

    // constant-rate and rate-built pathways are exactly consistent
    const TimeGrid grid(100.0, 0.05);
    CHECK(constant_rate_pathway(0.03, grid, economy).K[0] == 0.0);
    CHECK(max_rate_integral_mismatch(constant_rate_pathway(0.03, grid, economy)) < 1e-12);
    std::vector<double> rates(grid.size());
    for (std::size_t i = 0; i < rates.size(); ++i) {
        rates[i] = 0.01 + 0.005 * std::sin(0.1 * grid.time(i));
    }
    const Pathway custom = pathway_from_rates(rates, grid, economy);
    CHECK(custom.K[0] == 0.0);
    CHECK(max_rate_integral_mismatch(custom) < 1e-12);
    CHECK(custom.kind == PathwayKind::custom);

    // analytic quasi-stationary series approach trapezoid consistency at
    // second order in the step
    const Pathway coarse =
        quasi_stationary_pathway(0.0017, TimeGrid(100.0, 0.05), economy);
    const Pathway fine =
        quasi_stationary_pathway(0.0017, TimeGrid(100.0, 0.0025), economy);
    const double mismatch_coarse = max_rate_integral_mismatch(coarse);
    const double mismatch_fine = max_rate_integral_mismatch(fine);
    CHECK(mismatch_fine < 1e-8);
    // h^2 scaling: (0.05/0.0025)^2 = 400
    CHECK(mismatch_coarse / mismatch_fine == doctest::Approx(400.0).epsilon(0.05));
}

TEST_CASE("pathway emissions satisfy the intensity model pointwise") {
    EconomyParams economy;
    const TimeGrid grid(60.0, 0.05);
    const Pathway pathway = quasi_stationary_pathway(0.002, grid, economy);
    for (std::size_t i = 0; i < grid.size(); i += 239) {
        CHECK(pathway.m[i] ==
              doctest::Approx(emissions(grid.time(i), pathway.K[i], economy))
                  .epsilon(1e-14));
    }
}

TEST_CASE("solve_multiplier: sigma = 0 analytic round trip") {
    const EconomyParams economy = sigma_zero_economy();
    const TimeGrid grid(100.0, 0.05);
    const double c_star = 0.01;
    // analytic M(c) = (mu0/c) ln(1 + c G(T))
    const double goal =
        economy.mu0 / c_star * std::log1p(c_star * integrated_ggdp(100.0, economy));
    const MultiplierSolution solution = solve_multiplier(goal, grid, economy);
    CHECK(solution.c == doctest::Approx(c_star).epsilon(1e-8));
    CHECK(solution.lambda_ratio == doctest::Approx(c_star / economy.mu0).epsilon(1e-8));
    CHECK(std::abs(solution.residual) <= std::max(1e-9 * goal, 1e-6));
}

TEST_CASE("solve_multiplier: initial rates for the 300 PgC goal, theta = 1") {
    const double goal = units::pgc_to_gt_co2(300.0);
    CHECK(goal == doctest::Approx(1100.0).epsilon(1e-14));
    const TimeGrid grid(100.0, 0.05);

    // frozen from an independent quadrature+root-finding implementation
    const struct {
        double r;
        double k0;
    } expected[] = {{0.012, 0.0970922}, {0.024, 0.1307274}, {0.036, 0.1661846}};
    for (const auto& row : expected) {
        const EconomyParams economy = sigma_zero_economy(row.r);
        const MultiplierSolution solution = solve_multiplier(goal, grid, economy);
        CHECK(solution.c * economy.g0 == doctest::Approx(row.k0).epsilon(1e-5));
    }
}

TEST_CASE("solve_multiplier boundary continuity near business as usual") {
    const EconomyParams economy = sigma_zero_economy();
    const TimeGrid grid(100.0, 0.05);
    const double bau = bau_cumulative_emissions(grid, economy);
    const MultiplierSolution solution = solve_multiplier(bau * (1.0 - 1e-6), grid, economy);
    CHECK(solution.c < 1e-8);
    CHECK(std::abs(solution.residual) <= std::max(1e-9 * bau, 1e-6));
}

TEST_CASE("solve_multiplier infeasibility") {
    const EconomyParams economy = sigma_zero_economy();
    const TimeGrid grid(100.0, 0.05);
    const double bau = bau_cumulative_emissions(grid, economy);
    CHECK_THROWS_AS(solve_multiplier(bau, grid, economy), InfeasibleGoal);
    CHECK_THROWS_AS(solve_multiplier(bau * 1.5, grid, economy), InfeasibleGoal);
    CHECK_THROWS_AS(solve_multiplier(-5.0, grid, economy), std::invalid_argument);
}

TEST_CASE("M(c) is strictly decreasing on a log-spaced multiplier grid") {
    EconomyParams economy;  // sigma > 0 exercises the quadrature path
    const TimeGrid grid(100.0, 0.1);
    double previous = bau_cumulative_emissions(grid, economy);
    for (double log_c = -6.0; log_c <= 1.0; log_c += 0.5) {
        const double c = std::pow(10.0, log_c);
        const double m = quasi_stationary_pathway(c, grid, economy).M_cum.back();
        CHECK(m < previous);
        previous = m;
    }
}

TEST_CASE("stringent sigma = 0 goals give strictly decreasing rates") {
    const double goal = units::pgc_to_gt_co2(300.0);
    const TimeGrid grid(100.0, 0.05);
    for (double r : {0.012, 0.024, 0.036}) {
        const EconomyParams economy = sigma_zero_economy(r);
        const MultiplierSolution solution = solve_multiplier(goal, grid, economy);
        const Pathway pathway = quasi_stationary_pathway(solution.c, grid, economy);
        for (std::size_t i = 1; i < grid.size(); ++i) {
            CHECK(pathway.k[i] < pathway.k[i - 1]);
        }
    }
}

TEST_CASE("sigma = 0 emissions trajectories are nearly invariant of the growth rate") {
    const TimeGrid grid(100.0, 0.05);
    for (double goal_pgc : {300.0, 600.0, 900.0, 1200.0}) {
        const double goal = units::pgc_to_gt_co2(goal_pgc);
        std::vector<Pathway> pathways;
        for (double r : {0.012, 0.024, 0.036}) {
            const EconomyParams economy = sigma_zero_economy(r);
            pathways.push_back(
                quasi_stationary_pathway(solve_multiplier(goal, grid, economy).c, grid,
                                         economy));
        }
        const double m0 = pathways.front().m.front();
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            double lo = 1e300;
            double hi = -1e300;
            for (const Pathway& p : pathways) {
                lo = std::min(lo, p.m[i]);
                hi = std::max(hi, p.m[i]);
            }
            worst = std::max(worst, (hi - lo) / m0);
        }
        CHECK(worst < 0.15);
    }
}

TEST_CASE("constant-rate pathway closed form and chi = 0 limit") {
    EconomyParams economy;
    economy.mu0 = 36.0 / 77.8;
    economy.theta = 1.0 - 0.01 / 0.024;  // sigma = 0.01
    const TimeGrid grid(100.0, 0.05);

    const Pathway bau = constant_rate_pathway(0.0, grid, economy);
    CHECK(bau.M_cum.back() ==
          doctest::Approx(bau_cumulative_emissions(grid, economy)).epsilon(1e-12));

    const Pathway pathway = constant_rate_pathway(0.02, grid, economy);
    CHECK(pathway.M_cum.back() == doctest::Approx(2707.1301834358414).epsilon(1e-8));

    EconomyParams balanced;
    balanced.theta = 0.0;  // sigma = r, so k = 0 holds emissions at m0
    const Pathway flat = constant_rate_pathway(0.0, grid, balanced);
    CHECK(flat.M_cum.back() == doctest::Approx(balanced.m0() * 100.0).epsilon(1e-10));
}

TEST_CASE("solve_constant_rate") {
    EconomyParams economy;
    const TimeGrid grid(100.0, 0.05);

    // round trip
    const Pathway target = constant_rate_pathway(0.03, grid, economy);
    const double chi = 0.03 + economy.sigma() - economy.r;
    const double goal = economy.m0() * (-std::expm1(-chi * 100.0)) / chi;
    CHECK(solve_constant_rate(goal, grid, economy) == doctest::Approx(0.03).epsilon(1e-8));

    // theta = 0: the goal m0 T coincides with business as usual, met by k = 0
    EconomyParams balanced;
    balanced.theta = 0.0;
    CHECK(solve_constant_rate(balanced.m0() * 100.0, grid, balanced) == 0.0);

    // infeasible goals
    CHECK_THROWS_AS(solve_constant_rate(bau_cumulative_emissions(grid, economy) * 2.0,
                                        grid, economy),
                    InfeasibleGoal);
}

TEST_CASE("constant-rate solution for 300 PgC with sigma = 0.01") {
    EconomyParams economy;
    economy.theta = 1.0 - 0.01 / 0.024;  // sigma = 0.01 at r = 0.024
    const TimeGrid grid(100.0, 0.05);
    const double goal = units::pgc_to_gt_co2(300.0);
    const double k = solve_constant_rate(goal, grid, economy);
    CHECK(k == doctest::Approx(0.04508).epsilon(2e-3));
    // the pathway's quadrature cumulative also lands on the goal
    const Pathway pathway = constant_rate_pathway(k, grid, economy);
    CHECK(std::abs(pathway.M_cum.back() - goal) <= std::max(1e-9 * goal, 1e-6));

    // spending spread evenly ends up costlier: the constant-rate burden at T
    // exceeds the front-loaded quasi-stationary burden at T
    MacCurve curve;
    curve.mu0 = economy.mu0;
    const Pathway qs = quasi_stationary_pathway(solve_multiplier(goal, grid, economy).c,
                                                grid, economy);
    const double b_ck = burden(100.0, pathway.K.back(), pathway.k.back(), economy, curve);
    const double b_qs = burden(100.0, qs.K.back(), qs.k.back(), economy, curve);
    CHECK(b_ck > b_qs);
}

TEST_CASE("RK4 with sigma = delta = 0 matches the logarithmic solution") {
    const EconomyParams economy = sigma_zero_economy();
    MacCurve curve;
    const double lambda2 = 1.0;
    const double c = 0.00168;
    const double lambda1 = c * lambda2 / economy.mu0;

    const auto max_rel_err = [&](double step) {
        const TimeGrid grid(100.0, step);
        const OdeSolution solution =
            integrate_el_ode(lambda1, lambda2, 50.0, economy, curve, grid);
        REQUIRE_FALSE(solution.truncated);
        double worst = 0.0;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            const double K_exact =
                std::log1p(c * integrated_ggdp(grid.time(i), economy));
            const double K_ode = std::log(solution.x[i]);
            worst = std::max(worst, std::abs(K_ode - K_exact) / K_exact);
        }
        return worst;
    };

    CHECK(max_rel_err(0.05) < 1e-6);
    // 4th-order convergence, measured where truncation dominates roundoff
    const double coarse = max_rel_err(2.0);
    const double fine = max_rel_err(1.0);
    CHECK(coarse / fine > 12.0);
    CHECK(coarse / fine < 20.0);
}

TEST_CASE("RK4 trivial case: lambda1 = 0, sigma = delta = 0") {
    const EconomyParams economy = sigma_zero_economy();
    MacCurve curve;
    const TimeGrid grid(50.0, 0.5);
    const OdeSolution solution = integrate_el_ode(0.0, 1.0, 50.0, economy, curve, grid);
    REQUIRE_FALSE(solution.truncated);
    for (double x : solution.x) {
        CHECK(x == 1.0);
    }
}

TEST_CASE("RK4 guard flags non-positive excursions") {
    const EconomyParams economy = sigma_zero_economy();
    MacCurve curve;
    const TimeGrid grid(100.0, 0.05);
    // negative lambda1 drives x through zero
    const OdeSolution solution = integrate_el_ode(-1.0, 1.0, 50.0, economy, curve, grid);
    CHECK(solution.truncated);
    CHECK(solution.x.size() < grid.size());
    for (double x : solution.x) {
        CHECK(x > 0.0);
    }
}

TEST_CASE("sigma > 0 with lambda1 below sigma*alpha gives a decreasing solution") {
    EconomyParams economy;
    economy.theta = 1.0 - 0.01 / 0.024;  // sigma = 0.01
    MacCurve curve;
    const double sigma_alpha = economy.sigma() * curve.alpha;
    const double lambda1 = 0.05;
    REQUIRE(lambda1 < sigma_alpha);
    const TimeGrid grid(100.0, 0.05);
    const OdeSolution solution =
        integrate_el_ode(lambda1, 1e5, 50.0, economy, curve, grid);
    REQUIRE_FALSE(solution.truncated);
    for (std::size_t i = 1; i < solution.x.size(); ++i) {
        CHECK(solution.x[i] < solution.x[i - 1]);
    }
}

TEST_CASE("small-sigma expansion: sigma = 0 collapses to the exact solution") {
    const EconomyParams economy = sigma_zero_economy();
    MacCurve curve;
    const TimeGrid grid(100.0, 0.05);
    const double lambda1 = 0.05;
    const double lambda2 = 1e5;
    const PerturbationSeries series =
        small_sigma_expansion(lambda1, lambda2, economy, curve, grid);
    CHECK_FALSE(series.sigma_warning);
    const OdeSolution ode = integrate_el_ode(lambda1, lambda2, 50.0, economy, curve, grid);
    for (std::size_t i = 0; i < grid.size(); i += 211) {
        CHECK(series.x0[i] == doctest::Approx(ode.x[i]).epsilon(1e-9));
        // first-order term carries no contribution at sigma = 0
        CHECK(series.x0[i] + economy.sigma() * series.x1[i] ==
              doctest::Approx(ode.x[i]).epsilon(1e-9));
    }
}

TEST_CASE("small-sigma expansion: lambda1 -> 0 limit of the first-order term") {
    EconomyParams economy;
    economy.theta = 1.0 - 0.01 / 0.024;
    MacCurve curve;
    const TimeGrid grid(50.0, 0.05);
    const double lambda2 = 1e5;
    const PerturbationSeries series =
        small_sigma_expansion(0.0, lambda2, economy, curve, grid);
    const double beta_raw = curve.alpha * curve.mu0;
    for (std::size_t i = 0; i < grid.size(); i += 199) {
        const double t = grid.time(i);
        const double d = economy.r - economy.sigma();
        const double N = economy.g0 * std::expm1(d * t) / d;
        CHECK(series.x1[i] == doctest::Approx(-(beta_raw / lambda2) * N).epsilon(1e-12));
    }
}

TEST_CASE("small-sigma expansion error scales as sigma^2 N(sigma)^2") {
    MacCurve curve;
    const TimeGrid grid(100.0, 0.05);
    const double lambda1 = 0.05;
    const double lambda2 = 1e5;

    const auto run = [&](double sigma) {
        EconomyParams economy;
        economy.theta = 1.0 - sigma / economy.r;
        REQUIRE(economy.sigma() == doctest::Approx(sigma).epsilon(1e-12));
        const OdeSolution ode =
            integrate_el_ode(lambda1, lambda2, 50.0, economy, curve, grid);
        const PerturbationSeries series =
            small_sigma_expansion(lambda1, lambda2, economy, curve, grid);
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst = std::max(worst, std::abs(ode.x[i] - (series.x0[i] + sigma * series.x1[i])));
        }
        const double d = economy.r - sigma;
        const double N_T = economy.g0 * std::expm1(d * 100.0) / d;
        return worst / (sigma * sigma * N_T * N_T);
    };

    // the normalized error is a constant across sigma to first order
    const double at_002 = run(0.02);
    const double at_001 = run(0.01);
    const double at_0005 = run(0.005);
    CHECK(at_002 == doctest::Approx(at_001).epsilon(0.05));
    CHECK(at_001 == doctest::Approx(at_0005).epsilon(0.05));
}

TEST_CASE("small-sigma expansion: simplified form slope is negative below the threshold") {
    EconomyParams economy;
    economy.theta = 1.0 - 0.01 / 0.024;
    MacCurve curve;
    const TimeGrid grid(10.0, 0.1);
    const double lambda1 = 0.05;
    REQUIRE(lambda1 < economy.sigma() * curve.alpha);
    const PerturbationSeries series =
        small_sigma_expansion(lambda1, 1e5, economy, curve, grid);
    CHECK(series.x_simplified[0] == 1.0);
    CHECK(series.x_simplified[1] < 1.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        CHECK(series.x_simplified[i] < series.x_simplified[i - 1]);
    }
}

TEST_CASE("small-sigma expansion warns for large sigma") {
    EconomyParams economy;
    economy.r = 0.08;
    economy.theta = 0.2;  // sigma = 0.064 > 0.05
    MacCurve curve;
    const TimeGrid grid(10.0, 0.1);
    CHECK(small_sigma_expansion(0.01, 1e5, economy, curve, grid).sigma_warning);
}

TEST_CASE("solver rejects invalid arguments") {
    const EconomyParams economy = sigma_zero_economy();
    MacCurve curve;
    const TimeGrid grid(10.0, 0.1);
    CHECK_THROWS_AS(integrate_el_ode(0.1, 0.0, 1.0, economy, curve, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(quasi_stationary_pathway(-1.0, grid, economy), std::invalid_argument);
    CHECK_THROWS_AS(constant_rate_pathway(-0.1, grid, economy), std::invalid_argument);
    std::vector<double> short_rates{0.0, 0.1};
    CHECK_THROWS_AS(pathway_from_rates(short_rates, grid, economy),
                    std::invalid_argument);
}
