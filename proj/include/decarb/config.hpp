#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "decarb/economy.hpp"
#include "decarb/mac.hpp"

namespace decarb {

enum class PathwayChoice { quasi_stationary, constant_rate, both };

enum class OutputKind { pathway, expenditure, burden, cost_curve, power_law, delay };

// A scenario sweep: the baseline economy and MAC curve, the grid, the goal
// and growth-rate lists, and which series to emit.  Defaults reproduce the
// library's reference parameter set.
struct ScenarioConfig {
    EconomyParams economy;
    MacCurve curve;  // curve.mu0 is kept equal to economy.mu0
    double horizon = 100.0;  // yr
    double step = 0.05;      // yr
    std::vector<double> goals_pgc = {300.0, 600.0, 900.0, 1200.0};
    std::vector<double> growth_rates = {0.012, 0.024, 0.036};
    PathwayChoice pathway_kind = PathwayChoice::quasi_stationary;
    std::vector<OutputKind> outputs = {OutputKind::pathway};
    double tcre = 1.65;             // K per 1000 PgC
    double baseline_warming = 1.0;  // K, present warming
    double mac_reference_growth = 1.6;  // MAC-fit reference emissions / m0
    double cost_curve_k_max = 0.12;     // 1/yr
    std::size_t cost_curve_points = 20;
    std::vector<double> power_law_goals_pgc = {300.0, 450.0, 600.0, 750.0, 900.0};

    TimeGrid grid() const { return TimeGrid(horizon, step); }

    // Throws std::invalid_argument naming the violated invariant.
    void validate() const;
};

// Parses the flat key-value format (one `section.key = value` per line,
// '#' comments, comma-separated lists).  Unknown keys are rejected with the
// offending line; missing keys take their defaults.
ScenarioConfig parse_config(std::string_view text);

ScenarioConfig load_config(const std::filesystem::path& path);

// Canonical listing of every key; parse(serialize(c)) reproduces c exactly.
std::string serialize_config(const ScenarioConfig& config);

std::string to_string(PathwayChoice kind);
std::string to_string(OutputKind kind);

}  // namespace decarb
