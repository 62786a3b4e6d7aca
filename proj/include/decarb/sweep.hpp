#pragma once

#include <string>
#include <vector>

#include "decarb/config.hpp"
#include "decarb/table.hpp"

namespace decarb {

struct SweepResult {
    std::vector<ResultTable> tables;
    std::vector<std::string> errors;  // per-cell failures, also in table footers
};

// Evaluates every requested output for each goal x growth rate x pathway
// kind.  Cells run independently (optionally across `threads` workers);
// assembly order is fixed: goal-major, then growth rate, then the per-rate
// cost-curve and power-law tables.  Infeasible cells produce a flagged row
// instead of failing the sweep.  Output is identical for any thread count.
SweepResult run_sweep(const ScenarioConfig& config, unsigned threads = 1);

}  // namespace decarb
