#pragma once

#include <vector>

#include "decarb/economy.hpp"
#include "decarb/mac.hpp"
#include "decarb/pathway.hpp"

namespace decarb {

// Per-node expenditure series along a pathway.  p_mu and p_g are annual
// expenditures in billion $/yr, burden their undiscounted sum as a fraction
// of GGDP, and discounted_cumulative the running discounted total E(t_i) in
// billion $.
struct ExpenditureSeries {
    TimeGrid grid;
    std::vector<double> p_mu;
    std::vector<double> p_g;
    std::vector<double> burden;
    std::vector<double> discounted_cumulative;
};

// P_mu = alpha mu0 e^{-sigma t} g(t) k e^{(nu-1)K}, billion $/yr.
double annual_intensity_expenditure(double t, double K, double k,
                                    const EconomyParams& economy,
                                    const MacCurve& curve);

// P_g = (alpha mu0/(nu-1)) e^{-sigma t} r g(t) (e^{(nu-1)K} - 1), billion $/yr;
// smooth through nu = 1 via the analytic limit alpha mu0 e^{-sigma t} r g K.
double annual_expansion_expenditure(double t, double K,
                                    const EconomyParams& economy,
                                    const MacCurve& curve);

// (P_mu + P_g)/g as a pure fraction of GGDP (undiscounted by definition).
double burden(double t, double K, double k, const EconomyParams& economy,
              const MacCurve& curve);

// True iff nu > 1 + (1-theta) r / k (strict).  Throws std::domain_error for
// k <= 0.
bool burden_increasing_condition(double k, const EconomyParams& economy,
                                 const MacCurve& curve);

struct ClosedFormExpenditure {
    double intensity = 0.0;  // E_mu(T), billion $
    double expansion = 0.0;  // E_g(T), billion $
    double total() const { return intensity + expansion; }
};

// Discounted expenditure for a constant decarbonization rate, in closed form.
// Near-zero denominators ((nu-1)k + r - rho, r - rho, nu - 1) take their
// series limits below |x| T = 1e-8.
ClosedFormExpenditure constant_k_closed_form(double k, double T,
                                             const EconomyParams& economy,
                                             const MacCurve& curve);

// Full series along a pathway; E(t_i) is the Simpson running integral of
// e^{-delta s}(P_mu + P_g).  Throws std::invalid_argument on a pathway whose
// series do not match its grid.
ExpenditureSeries discounted_total(const Pathway& pathway,
                                   const EconomyParams& economy,
                                   const MacCurve& curve);

}  // namespace decarb
