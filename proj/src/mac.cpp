#include "decarb/mac.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "decarb/numeric.hpp"

namespace decarb {

void MacCurve::validate() const {
    if (!(std::isfinite(alpha) && alpha > 0.0)) {
        throw std::invalid_argument("mac.alpha must be positive, got " + std::to_string(alpha));
    }
    if (!(std::isfinite(nu) && nu > 0.0)) {
        throw std::invalid_argument("mac.nu must be positive, got " + std::to_string(nu));
    }
    if (!(std::isfinite(mu0) && mu0 > 0.0)) {
        throw std::invalid_argument("mac.mu0 must be positive, got " + std::to_string(mu0));
    }
}

double mac_value(double mu, double t, const MacCurve& curve, double sigma) {
    if (!(mu > 0.0)) {
        throw std::domain_error("mac_value: intensity must be positive, got " +
                                std::to_string(mu));
    }
    const double bau = curve.mu0 * std::exp(-sigma * t);
    const double ratio = mu / bau;
    if (ratio > 1.0 + 1e-12) {
        throw std::domain_error(
            "mac_value: intensity exceeds the business-as-usual reference (ratio " +
            std::to_string(ratio) + ")");
    }
    return curve.alpha / std::pow(ratio, curve.nu);
}

double carbon_price(double K, const MacCurve& curve) {
    return curve.alpha * std::exp(curve.nu * K);
}

MacFit fit_mac(std::span<const MacDataPoint> points, double reference_emissions,
               double mu0) {
    if (points.size() < 2) {
        throw std::invalid_argument("fit_mac: need at least two data points");
    }
    if (!(reference_emissions > 0.0)) {
        throw std::invalid_argument("fit_mac: reference emissions must be positive");
    }

    std::vector<double> x;  // -ln(intensity ratio)
    std::vector<double> y;  // ln(cost)
    x.reserve(points.size());
    y.reserve(points.size());
    for (const auto& p : points) {
        if (!(p.reduction >= 0.0)) {
            throw std::invalid_argument("fit_mac: reductions must be non-negative");
        }
        const double rho = 1.0 - p.reduction / reference_emissions;
        if (!(rho > 0.0)) {
            throw std::invalid_argument(
                "fit_mac: a reduction meets or exceeds the reference emissions");
        }
        if (!(p.marginal_cost > 0.0)) {
            throw std::invalid_argument("fit_mac: marginal costs must be positive");
        }
        x.push_back(-std::log(rho));
        y.push_back(std::log(p.marginal_cost));
    }

    const num::LinearFit line = num::fit_line(x, y);

    MacFit fit;
    fit.curve.alpha = std::exp(line.intercept);
    fit.curve.nu = line.slope;
    fit.curve.mu0 = mu0;
    fit.curve.validate();
    fit.alpha_stderr = fit.curve.alpha * line.intercept_stderr;  // delta method
    fit.nu_stderr = line.slope_stderr;
    fit.residual_stderr = line.residual_stderr;
    fit.n_points = points.size();
    return fit;
}

}  // namespace decarb
