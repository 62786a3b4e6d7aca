#pragma once

#include <cstddef>
#include <span>

#include "decarb/units.hpp"

namespace decarb {

// Marginal abatement cost surface C(mu) = alpha / (mu / mu_bau)^nu, where
// mu_bau = mu0 e^{-sigma t} is the intensity the economy would have without
// deliberate mitigation.
struct MacCurve {
    double alpha = 10.4;  // present MAC, billion $ / (Gt CO2/yr)
    double nu = 2.4;      // MAC exponent, dimensionless
    double mu0 = 0.46;    // reference intensity at t=0, Gt CO2 / trillion $

    // beta = alpha mu0 expressed in years (absorbs the billion/trillion
    // factor); multiplying by a rate and e^{(nu-1)K} gives a GGDP fraction.
    double beta_years() const { return alpha * mu0 / units::billion_per_trillion; }

    void validate() const;
};

struct MacDataPoint {
    double reduction;      // emissions reduction below the reference, Gt CO2/yr
    double marginal_cost;  // billion $ / (Gt CO2/yr)
};

struct MacFit {
    MacCurve curve;
    double alpha_stderr = 0.0;
    double nu_stderr = 0.0;     // OLS slope standard error
    double residual_stderr = 0.0;
    std::size_t n_points = 0;
};

// MAC at intensity mu and time t.  Throws std::domain_error if mu <= 0 or mu
// exceeds the business-as-usual intensity by more than 1e-12 relative slack.
double mac_value(double mu, double t, const MacCurve& curve, double sigma);

// Carbon price alpha e^{nu K}, equal to the MAC along a pathway.
double carbon_price(double K, const MacCurve& curve);

// Least-squares fit of (alpha, nu) from cost points, regressing ln(cost) on
// -ln(intensity ratio).  mu0 is not identified by the data and is taken from
// the caller.  Throws std::invalid_argument on fewer than two points, points
// at or beyond the reference, non-positive costs, or equal reductions.
MacFit fit_mac(std::span<const MacDataPoint> points, double reference_emissions,
               double mu0);

}  // namespace decarb
