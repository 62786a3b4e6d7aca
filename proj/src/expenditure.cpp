#include "decarb/expenditure.hpp"

#include <cmath>
#include <stdexcept>

#include "decarb/numeric.hpp"
#include "decarb/units.hpp"

namespace decarb {

namespace {

// (e^{(nu-1)K} - 1)/(nu-1), smooth through nu = 1 where it tends to K.
double expansion_factor(double K, double nu) {
    return K * num::expm1_over_x((nu - 1.0) * K);
}

}  // namespace

double annual_intensity_expenditure(double t, double K, double k,
                                    const EconomyParams& economy,
                                    const MacCurve& curve) {
    return curve.alpha * curve.mu0 * std::exp(-economy.sigma() * t) * ggdp(t, economy) *
           k * std::exp((curve.nu - 1.0) * K);
}

double annual_expansion_expenditure(double t, double K, const EconomyParams& economy,
                                    const MacCurve& curve) {
    // dg/dt = r g
    return curve.alpha * curve.mu0 * std::exp(-economy.sigma() * t) * economy.r *
           ggdp(t, economy) * expansion_factor(K, curve.nu);
}

double burden(double t, double K, double k, const EconomyParams& economy,
              const MacCurve& curve) {
    return curve.beta_years() * std::exp(-economy.sigma() * t) *
           (k * std::exp((curve.nu - 1.0) * K) + economy.r * expansion_factor(K, curve.nu));
}

bool burden_increasing_condition(double k, const EconomyParams& economy,
                                 const MacCurve& curve) {
    if (!(k > 0.0)) {
        throw std::domain_error("burden_increasing_condition: k must be positive");
    }
    return curve.nu > 1.0 + economy.sigma() / k;
}

ClosedFormExpenditure constant_k_closed_form(double k, double T,
                                             const EconomyParams& economy,
                                             const MacCurve& curve) {
    if (!(k >= 0.0)) {
        throw std::domain_error("constant_k_closed_form: k must be non-negative");
    }
    const double rho = economy.rho();
    const double a = (curve.nu - 1.0) * k + economy.r - rho;
    const double b = economy.r - rho;
    const double base = curve.alpha * curve.mu0 * economy.g0;  // billion $ per rate-year

    const double int_a = T * num::expm1_over_x(a * T);  // \int_0^T e^{a s} ds

    ClosedFormExpenditure result;
    result.intensity = base * k * int_a;

    const double nu1 = curve.nu - 1.0;
    if (std::abs(nu1 * k * T) < 1e-8) {
        // (int_a - int_b)/(nu-1) -> k \int_0^T s e^{b s} ds
        result.expansion = base * economy.r * k * num::ramp_exp_integral(b, T);
    } else {
        const double int_b = T * num::expm1_over_x(b * T);
        result.expansion = base * (economy.r / nu1) * (int_a - int_b);
    }
    return result;
}

ExpenditureSeries discounted_total(const Pathway& pathway, const EconomyParams& economy,
                                   const MacCurve& curve) {
    const std::size_t n = pathway.grid.size();
    if (pathway.K.size() != n || pathway.k.size() != n) {
        throw std::invalid_argument("discounted_total: pathway series do not match its grid");
    }

    ExpenditureSeries series{pathway.grid, {}, {}, {}, {}};
    series.p_mu.resize(n);
    series.p_g.resize(n);
    series.burden.resize(n);
    std::vector<double> discounted(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = pathway.grid.time(i);
        series.p_mu[i] = annual_intensity_expenditure(t, pathway.K[i], pathway.k[i],
                                                      economy, curve);
        series.p_g[i] = annual_expansion_expenditure(t, pathway.K[i], economy, curve);
        series.burden[i] = burden(t, pathway.K[i], pathway.k[i], economy, curve);
        discounted[i] = std::exp(-economy.delta * t) * (series.p_mu[i] + series.p_g[i]);
    }
    series.discounted_cumulative = num::cumulative_integral(discounted, pathway.grid.step());
    return series;
}

}  // namespace decarb
