#include "decarb/numeric.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace decarb::num {

double expm1_over_x(double x) {
    if (std::abs(x) < 1e-8) {
        return 1.0 + x * (0.5 + x / 6.0);
    }
    return std::expm1(x) / x;
}

double ramp_exp_integral(double b, double T) {
    const double y = b * T;
    if (std::abs(y) < 1e-2) {
        return T * T * (0.5 + y * (1.0 / 3.0 + y * (0.125 + y / 30.0)));
    }
    return (std::exp(y) * (y - 1.0) + 1.0) / (b * b);
}

std::vector<double> cumulative_integral(std::span<const double> f, double step) {
    const std::size_t n = f.size();
    std::vector<double> out(n, 0.0);
    if (n < 2) {
        return out;
    }
    if (n == 2) {
        out[1] = 0.5 * step * (f[0] + f[1]);
        return out;
    }
    if (n == 3) {
        out[1] = step / 12.0 * (5.0 * f[0] + 8.0 * f[1] - f[2]);
        out[2] = step / 3.0 * (f[0] + 4.0 * f[1] + f[2]);
        return out;
    }
    for (std::size_t i = 2; i < n; i += 2) {
        out[i] = out[i - 2] + step / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    }
    for (std::size_t i = 1; i < n; i += 2) {
        if (i + 2 < n) {
            out[i] = out[i - 1] +
                     step / 24.0 *
                         (9.0 * f[i - 1] + 19.0 * f[i] - 5.0 * f[i + 1] + f[i + 2]);
        } else {
            out[i] = out[i - 1] +
                     step / 24.0 *
                         (f[i - 3] - 5.0 * f[i - 2] + 19.0 * f[i - 1] + 9.0 * f[i]);
        }
    }
    return out;
}

double integrate(std::span<const double> f, double step) {
    if (f.size() < 2) {
        return 0.0;
    }
    return cumulative_integral(f, step).back();
}

RootResult find_root_brent(const std::function<double(double)>& f, double lo,
                           double hi, double f_tol, int max_iter) {
    double a = lo;
    double b = hi;
    double fa = f(a);
    double fb = f(b);
    if (std::abs(fa) <= f_tol) {
        return {a, fa, 0};
    }
    if (std::abs(fb) <= f_tol) {
        return {b, fb, 0};
    }
    if ((fa > 0.0) == (fb > 0.0)) {
        throw std::invalid_argument("find_root_brent: interval does not bracket a root");
    }

    double c = a;
    double fc = fa;
    double d = b - a;
    double e = d;
    const double eps = std::numeric_limits<double>::epsilon();

    for (int iter = 1; iter <= max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol1 = 2.0 * eps * std::abs(b);
        const double xm = 0.5 * (c - b);
        if (std::abs(fb) <= f_tol || std::abs(xm) <= tol1) {
            return {b, fb, iter};
        }
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            // inverse quadratic / secant step
            const double s = fb / fa;
            double p;
            double q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc;
                const double rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            }
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if (std::abs(d) > tol1) {
            b += d;
        } else {
            b += (xm > 0.0 ? tol1 : -tol1);
        }
        fb = f(b);
    }
    return {b, fb, max_iter};
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    if (n != y.size()) {
        throw std::invalid_argument("fit_line: size mismatch");
    }
    if (n < 2) {
        throw std::invalid_argument("fit_line: need at least two points");
    }
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mean_x;
        const double dy = y[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) {
        throw std::invalid_argument("fit_line: rank-deficient regression (all x equal)");
    }

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    double ssr = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double residual = y[i] - (fit.intercept + fit.slope * x[i]);
        ssr += residual * residual;
    }
    fit.r_squared = syy > 0.0 ? 1.0 - ssr / syy : 1.0;
    if (n > 2) {
        const double s2 = ssr / static_cast<double>(n - 2);
        fit.residual_stderr = std::sqrt(s2);
        fit.slope_stderr = std::sqrt(s2 / sxx);
        fit.intercept_stderr =
            std::sqrt(s2 * (1.0 / static_cast<double>(n) + mean_x * mean_x / sxx));
    }
    return fit;
}

}  // namespace decarb::num
