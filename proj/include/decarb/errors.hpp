#pragma once

#include <stdexcept>

namespace decarb {

// The requested cumulative-emissions goal cannot be met: it sits at or above
// the business-as-usual total, or outside the solver's multiplier range.
struct InfeasibleGoal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A root finder exhausted its iteration budget or could not reach the
// requested residual.
struct SolverFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace decarb
