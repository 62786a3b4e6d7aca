#pragma once

#include <cstddef>

namespace decarb {

struct Pathway;

// Baseline global economy: exponential GGDP growth and the emissions
// intensity decline it drives on its own.
struct EconomyParams {
    double g0 = 77.8;     // GGDP at t=0, trillion $/yr
    double r = 0.024;     // annual GGDP growth rate, 1/yr
    double theta = 0.75;  // income elasticity of CO2 emissions, in [0,1]
    double mu0 = 0.46;    // emissions intensity at t=0, Gt CO2 / trillion $
    double delta = 0.0;   // time-discount rate, 1/yr

    // Exogenous decarbonization rate sigma = (1-theta) r, 1/yr.
    double sigma() const { return (1.0 - theta) * r; }
    // Present emissions m0 = mu0 g0, Gt CO2/yr.
    double m0() const { return mu0 * g0; }
    // Combined decay rho = sigma + delta, 1/yr.
    double rho() const { return sigma() + delta; }

    // Throws std::invalid_argument naming the violated invariant.
    void validate() const;
};

// Uniform grid t_i = i * step, i = 0..n, with t_n = horizon.  The horizon
// must be an integer multiple of the step (within 1e-9 yr).
class TimeGrid {
  public:
    TimeGrid(double horizon, double step);

    double horizon() const { return horizon_; }
    double step() const { return step_; }
    std::size_t size() const { return n_ + 1; }  // node count
    std::size_t intervals() const { return n_; }
    double time(std::size_t i) const { return static_cast<double>(i) * step_; }

    // Node index of time T; throws std::invalid_argument if T is not a grid
    // node within 1e-9 yr or lies outside the grid.
    std::size_t index_of(double T) const;

  private:
    double horizon_;
    double step_;
    std::size_t n_;
};

// sigma = (1 - theta) r.  Throws std::domain_error outside 0<=theta<=1, r>=0.
double exogenous_rate(double theta, double r);

// g(t) = g0 e^{r t}, trillion $/yr.
double ggdp(double t, const EconomyParams& economy);

// G(t) = g0 (e^{r t} - 1)/r, trillion $; analytic limit g0 t as r -> 0.
double integrated_ggdp(double t, const EconomyParams& economy);

// m = mu0 g(t) e^{-K} e^{-sigma t}, Gt CO2/yr.
double emissions(double t, double K, const EconomyParams& economy);

// M(T) from the pathway's Simpson running integral.  T must be a grid node.
double cumulative_emissions(const Pathway& pathway, double T);

}  // namespace decarb
