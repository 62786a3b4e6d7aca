#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "decarb/mac.hpp"

using namespace decarb;

TEST_CASE("mac_value examples and domain errors") {
    const MacCurve curve{};
    const double sigma = 0.01;
    // at the business-as-usual intensity the MAC is alpha
    for (double t : {0.0, 10.0, 40.0}) {
        const double bau = curve.mu0 * std::exp(-sigma * t);
        CHECK(mac_value(bau, t, curve, sigma) == doctest::Approx(10.4).epsilon(1e-13));
    }
    // ratio 0.5
    CHECK(mac_value(0.5 * curve.mu0, 0.0, curve, 0.0) ==
          doctest::Approx(10.4 * std::pow(2.0, 2.4)).epsilon(1e-13));
    CHECK(mac_value(0.5 * curve.mu0, 0.0, curve, 0.0) ==
          doctest::Approx(54.8915290881524).epsilon(1e-12));

    CHECK_THROWS_AS(mac_value(0.47, 0.0, curve, 0.0), std::domain_error);
    CHECK_THROWS_AS(mac_value(0.0, 0.0, curve, 0.0), std::domain_error);
    CHECK_THROWS_AS(mac_value(-0.1, 0.0, curve, 0.0), std::domain_error);
    // within the 1e-12 relative slack the ratio may round just above 1
    CHECK_NOTHROW(mac_value(curve.mu0 * (1.0 + 5e-13), 0.0, curve, 0.0));
}

TEST_CASE("mac_value is monotone decreasing in mu and scale invariant") {
    const MacCurve curve{};
    double previous = 0.0;
    for (double ratio : {1.0, 0.8, 0.6, 0.4, 0.2}) {
        const double value = mac_value(ratio * curve.mu0, 0.0, curve, 0.0);
        CHECK(value > previous);
        previous = value;
    }
    // scaling mu and the reference together leaves C unchanged
    MacCurve doubled = curve;
    doubled.mu0 = 2.0 * curve.mu0;
    CHECK(mac_value(0.3 * curve.mu0, 0.0, curve, 0.0) ==
          doctest::Approx(mac_value(0.6 * curve.mu0, 0.0, doubled, 0.0)).epsilon(1e-13));
}

TEST_CASE("carbon_price examples") {
    const MacCurve curve{};
    CHECK(carbon_price(0.0, curve) == doctest::Approx(10.4));
    CHECK(carbon_price(std::log(2.0) / curve.nu, curve) ==
          doctest::Approx(2.0 * 10.4).epsilon(1e-13));
    CHECK(carbon_price(0.5, curve) == doctest::Approx(10.4 * std::exp(1.2)).epsilon(1e-13));
}

TEST_CASE("carbon_price equals mac_value along a mitigation trajectory") {
    const MacCurve curve{};
    for (double sigma : {0.0, 0.003, 0.01}) {
        for (double t : {0.0, 5.0, 50.0, 100.0}) {
            for (double K : {0.0, 0.3, 1.0, 3.0}) {
                const double mu = curve.mu0 * std::exp(-K) * std::exp(-sigma * t);
                CHECK(carbon_price(K, curve) ==
                      doctest::Approx(mac_value(mu, t, curve, sigma)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("fit_mac: two-point exact fit") {
    const double alpha = 10.4;
    const double nu = 2.4;
    std::vector<MacDataPoint> points;
    const double reference = 57.0;
    points.push_back({0.0, alpha});                                    // rho = 1
    points.push_back({0.5 * reference, alpha * std::pow(2.0, nu)});    // rho = 0.5
    const MacFit fit = fit_mac(points, reference, 0.46);
    CHECK(fit.curve.alpha == doctest::Approx(alpha).epsilon(1e-12));
    CHECK(fit.curve.nu == doctest::Approx(nu).epsilon(1e-12));
    CHECK(fit.alpha_stderr == 0.0);
    CHECK(fit.nu_stderr == 0.0);
    CHECK(fit.curve.mu0 == doctest::Approx(0.46));
}

TEST_CASE("fit_mac: noiseless synthetic data round-trips to 1e-10") {
    std::mt19937 rng(20260811);
    std::uniform_real_distribution<double> alpha_dist(1.0, 40.0);
    std::uniform_real_distribution<double> nu_dist(0.5, 4.0);
    const double reference = 1.6 * 35.788;
    for (int trial = 0; trial < 20; ++trial) {
        const double alpha = alpha_dist(rng);
        const double nu = nu_dist(rng);
        std::vector<MacDataPoint> points;
        for (double rho : {0.95, 0.8, 0.65, 0.5, 0.35, 0.2}) {
            points.push_back({reference * (1.0 - rho), alpha / std::pow(rho, nu)});
        }
        const MacFit fit = fit_mac(points, reference, 0.46);
        CHECK(fit.curve.alpha == doctest::Approx(alpha).epsilon(1e-10));
        CHECK(fit.curve.nu == doctest::Approx(nu).epsilon(1e-10));
        CHECK(fit.residual_stderr < 1e-10);
    }
}

TEST_CASE("fit_mac standard errors respond to noise") {
    // multiplicative noise in cost space shows up as residual spread in logs
    std::mt19937 rng(7);
    std::normal_distribution<double> noise(0.0, 0.2);
    const double reference = 57.0;
    std::vector<MacDataPoint> points;
    for (double rho : {0.9, 0.75, 0.6, 0.45, 0.3, 0.15}) {
        points.push_back(
            {reference * (1.0 - rho), 10.4 / std::pow(rho, 2.4) * std::exp(noise(rng))});
    }
    const MacFit fit = fit_mac(points, reference, 0.46);
    CHECK(fit.nu_stderr > 0.0);
    CHECK(fit.alpha_stderr > 0.0);
    CHECK(fit.residual_stderr > 0.01);
    CHECK(fit.n_points == 6);
}

TEST_CASE("fit_mac input validation") {
    const double reference = 50.0;
    std::vector<MacDataPoint> one{{0.0, 10.0}};
    CHECK_THROWS_AS(fit_mac(one, reference, 0.46), std::invalid_argument);

    std::vector<MacDataPoint> beyond{{0.0, 10.0}, {reference, 99.0}};  // rho = 0
    CHECK_THROWS_AS(fit_mac(beyond, reference, 0.46), std::invalid_argument);

    std::vector<MacDataPoint> equal{{10.0, 12.0}, {10.0, 14.0}};  // rank deficient
    CHECK_THROWS_AS(fit_mac(equal, reference, 0.46), std::invalid_argument);

    std::vector<MacDataPoint> negative_cost{{0.0, 10.0}, {10.0, -3.0}};
    CHECK_THROWS_AS(fit_mac(negative_cost, reference, 0.46), std::invalid_argument);
}

TEST_CASE("beta in years picks up the billion/trillion factor") {
    const MacCurve curve{};
    CHECK(curve.beta_years() == doctest::Approx(4.784e-3).epsilon(1e-12));
}
