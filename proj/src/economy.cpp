#include "decarb/economy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "decarb/numeric.hpp"
#include "decarb/pathway.hpp"

namespace decarb {

void EconomyParams::validate() const {
    if (!(std::isfinite(g0) && g0 > 0.0)) {
        throw std::invalid_argument("economy.g0 must be positive, got " + std::to_string(g0));
    }
    if (!(std::isfinite(mu0) && mu0 > 0.0)) {
        throw std::invalid_argument("economy.mu0 must be positive, got " + std::to_string(mu0));
    }
    if (!(std::isfinite(r) && r >= 0.0)) {
        throw std::invalid_argument("economy.r must be non-negative, got " + std::to_string(r));
    }
    if (!(std::isfinite(delta) && delta >= 0.0)) {
        throw std::invalid_argument("economy.delta must be non-negative, got " +
                                    std::to_string(delta));
    }
    if (!(std::isfinite(theta) && theta >= 0.0 && theta <= 1.0)) {
        throw std::invalid_argument("economy.theta must lie in [0, 1], got " +
                                    std::to_string(theta));
    }
    if (!std::isfinite(m0())) {
        throw std::invalid_argument("economy: mu0 * g0 is not finite");
    }
}

TimeGrid::TimeGrid(double horizon, double step) : horizon_(horizon), step_(step) {
    if (!(std::isfinite(step) && step > 0.0)) {
        throw std::invalid_argument("grid.step must be positive");
    }
    if (!(std::isfinite(horizon) && horizon > 0.0)) {
        throw std::invalid_argument("grid.horizon must be positive");
    }
    const double ratio = horizon / step;
    const auto n = static_cast<long long>(std::llround(ratio));
    if (n < 1 || std::abs(static_cast<double>(n) * step - horizon) > 1e-9) {
        throw std::invalid_argument(
            "grid.horizon must be an integer multiple of grid.step (within 1e-9 yr)");
    }
    n_ = static_cast<std::size_t>(n);
}

std::size_t TimeGrid::index_of(double T) const {
    const auto i = static_cast<long long>(std::llround(T / step_));
    if (i < 0 || static_cast<std::size_t>(i) > n_ ||
        std::abs(static_cast<double>(i) * step_ - T) > 1e-9) {
        throw std::invalid_argument("time " + std::to_string(T) +
                                    " is not a node of the grid");
    }
    return static_cast<std::size_t>(i);
}

double exogenous_rate(double theta, double r) {
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw std::domain_error("exogenous_rate: theta must lie in [0, 1], got " +
                                std::to_string(theta));
    }
    if (!(r >= 0.0)) {
        throw std::domain_error("exogenous_rate: growth rate must be non-negative, got " +
                                std::to_string(r));
    }
    return (1.0 - theta) * r;
}

double ggdp(double t, const EconomyParams& economy) {
    return economy.g0 * std::exp(economy.r * t);
}

double integrated_ggdp(double t, const EconomyParams& economy) {
    return economy.g0 * t * num::expm1_over_x(economy.r * t);
}

double emissions(double t, double K, const EconomyParams& economy) {
    return economy.mu0 * ggdp(t, economy) * std::exp(-K) * std::exp(-economy.sigma() * t);
}

double cumulative_emissions(const Pathway& pathway, double T) {
    return pathway.M_cum.at(pathway.grid.index_of(T));
}

}  // namespace decarb
