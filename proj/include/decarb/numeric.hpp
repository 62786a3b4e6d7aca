#pragma once

#include <functional>
#include <span>
#include <vector>

namespace decarb::num {

// (e^x - 1)/x, with the second-order Taylor limit below |x| = 1e-8.
double expm1_over_x(double x);

// \int_0^T s e^{b s} ds, with the series limit T^2/2 for small b*T.
double ramp_exp_integral(double b, double T);

// Running integral of uniformly spaced samples: out[i] ~ \int_{t_0}^{t_i} f.
// Even prefixes are composite Simpson; odd interior nodes add a cubic
// (Adams-Moulton) half panel, keeping every node 4th-order accurate.
std::vector<double> cumulative_integral(std::span<const double> f, double step);

// Integral over the whole sample range (last node of cumulative_integral).
double integrate(std::span<const double> f, double step);

struct RootResult {
    double x = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Brent's method on a sign-changing bracket [lo, hi].  Stops when
// |f| <= f_tol or the bracket collapses to machine width.  Throws
// std::invalid_argument if the bracket does not straddle a root.
RootResult find_root_brent(const std::function<double(double)>& f, double lo,
                           double hi, double f_tol, int max_iter = 200);

struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double intercept_stderr = 0.0;
    double slope_stderr = 0.0;
    double residual_stderr = 0.0;
    double r_squared = 1.0;
};

// Ordinary least squares of y on x.  Standard errors are zero when there are
// no residual degrees of freedom (n == 2).  Throws std::invalid_argument on
// fewer than two points or a rank-deficient design (all x equal).
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace decarb::num
