#include "decarb/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "decarb/table.hpp"

namespace decarb {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + message);
}

double parse_number(std::string_view text, std::size_t line) {
    text = trim(text);
    double value = 0.0;
    const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
    if (result.ec != std::errc{} || result.ptr != text.data() + text.size()) {
        fail(line, "expected a number, got '" + std::string(text) + "'");
    }
    return value;
}

std::size_t parse_count(std::string_view text, std::size_t line) {
    const double value = parse_number(text, line);
    if (!(value >= 1.0) || value != std::floor(value)) {
        fail(line, "expected a positive integer, got '" + std::string(text) + "'");
    }
    return static_cast<std::size_t>(value);
}

std::vector<double> parse_list(std::string_view text, std::size_t line) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        if (!trim(item).empty()) {
            values.push_back(parse_number(item, line));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (values.empty()) {
        fail(line, "expected a non-empty list");
    }
    return values;
}

PathwayChoice parse_kind(std::string_view text, std::size_t line) {
    const std::string_view v = trim(text);
    if (v == "quasi_stationary") return PathwayChoice::quasi_stationary;
    if (v == "constant_rate") return PathwayChoice::constant_rate;
    if (v == "both") return PathwayChoice::both;
    fail(line, "pathway_kind must be quasi_stationary, constant_rate or both");
}

OutputKind parse_output(std::string_view v, std::size_t line) {
    if (v == "pathway") return OutputKind::pathway;
    if (v == "expenditure") return OutputKind::expenditure;
    if (v == "burden") return OutputKind::burden;
    if (v == "cost_curve") return OutputKind::cost_curve;
    if (v == "power_law") return OutputKind::power_law;
    if (v == "delay") return OutputKind::delay;
    fail(line, "unknown output '" + std::string(v) + "'");
}

std::vector<OutputKind> parse_outputs(std::string_view text, std::size_t line) {
    std::vector<OutputKind> outputs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                               : comma - start);
        const std::string_view v = trim(item);
        if (!v.empty()) {
            outputs.push_back(parse_output(v, line));
        }
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (outputs.empty()) {
        fail(line, "outputs must not be empty");
    }
    return outputs;
}

std::string join(const std::vector<double>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_double(values[i]);
    }
    return out;
}

}  // namespace

std::string to_string(PathwayChoice kind) {
    switch (kind) {
        case PathwayChoice::quasi_stationary: return "quasi_stationary";
        case PathwayChoice::constant_rate: return "constant_rate";
        case PathwayChoice::both: return "both";
    }
    return "quasi_stationary";
}

std::string to_string(OutputKind kind) {
    switch (kind) {
        case OutputKind::pathway: return "pathway";
        case OutputKind::expenditure: return "expenditure";
        case OutputKind::burden: return "burden";
        case OutputKind::cost_curve: return "cost_curve";
        case OutputKind::power_law: return "power_law";
        case OutputKind::delay: return "delay";
    }
    return "pathway";
}

void ScenarioConfig::validate() const {
    economy.validate();
    curve.validate();
    TimeGrid check(horizon, step);  // throws on a bad grid
    (void)check;
    if (goals_pgc.empty()) {
        throw std::invalid_argument("goals_pgc must not be empty");
    }
    for (double g : goals_pgc) {
        if (!(g > 0.0)) {
            throw std::invalid_argument("goals_pgc must be positive");
        }
    }
    if (growth_rates.empty()) {
        throw std::invalid_argument("growth_rates must not be empty");
    }
    for (double r : growth_rates) {
        EconomyParams e = economy;
        e.r = r;
        e.validate();
    }
    if (outputs.empty()) {
        throw std::invalid_argument("outputs must not be empty");
    }
    if (!(tcre > 0.0)) {
        throw std::invalid_argument("tcre must be positive");
    }
    if (!(mac_reference_growth > 0.0)) {
        throw std::invalid_argument("mac.reference_growth must be positive");
    }
    if (!(cost_curve_k_max > 0.0)) {
        throw std::invalid_argument("cost_curve.k_max must be positive");
    }
    if (cost_curve_points < 2) {
        throw std::invalid_argument("cost_curve.points must be at least 2");
    }
    for (double g : power_law_goals_pgc) {
        if (!(g > 0.0)) {
            throw std::invalid_argument("power_law.goals_pgc must be positive");
        }
    }
}

ScenarioConfig parse_config(std::string_view text) {
    ScenarioConfig config;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t nl = text.find('\n', start);
        std::string_view line =
            text.substr(start, nl == std::string_view::npos ? std::string_view::npos
                                                            : nl - start);
        ++line_no;
        start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;

        const std::size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            fail(line_no, "expected 'key = value'");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (value.empty()) {
            fail(line_no, "missing value for '" + std::string(key) + "'");
        }

        if (key == "economy.g0") {
            config.economy.g0 = parse_number(value, line_no);
        } else if (key == "economy.r") {
            config.economy.r = parse_number(value, line_no);
        } else if (key == "economy.theta") {
            config.economy.theta = parse_number(value, line_no);
        } else if (key == "economy.mu0") {
            config.economy.mu0 = parse_number(value, line_no);
            config.curve.mu0 = config.economy.mu0;
        } else if (key == "economy.delta") {
            config.economy.delta = parse_number(value, line_no);
        } else if (key == "mac.alpha") {
            config.curve.alpha = parse_number(value, line_no);
        } else if (key == "mac.nu") {
            config.curve.nu = parse_number(value, line_no);
        } else if (key == "mac.reference_growth") {
            config.mac_reference_growth = parse_number(value, line_no);
        } else if (key == "grid.horizon") {
            config.horizon = parse_number(value, line_no);
        } else if (key == "grid.step") {
            config.step = parse_number(value, line_no);
        } else if (key == "goals_pgc") {
            config.goals_pgc = parse_list(value, line_no);
        } else if (key == "growth_rates") {
            config.growth_rates = parse_list(value, line_no);
        } else if (key == "pathway_kind") {
            config.pathway_kind = parse_kind(value, line_no);
        } else if (key == "outputs") {
            config.outputs = parse_outputs(value, line_no);
        } else if (key == "tcre") {
            config.tcre = parse_number(value, line_no);
        } else if (key == "baseline_warming") {
            config.baseline_warming = parse_number(value, line_no);
        } else if (key == "cost_curve.k_max") {
            config.cost_curve_k_max = parse_number(value, line_no);
        } else if (key == "cost_curve.points") {
            config.cost_curve_points = parse_count(value, line_no);
        } else if (key == "power_law.goals_pgc") {
            config.power_law_goals_pgc = parse_list(value, line_no);
        } else {
            fail(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    config.validate();
    return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open config '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string serialize_config(const ScenarioConfig& config) {
    std::string out;
    const auto emit = [&out](const std::string& key, const std::string& value) {
        out += key;
        out += " = ";
        out += value;
        out += '\n';
    };
    emit("economy.g0", format_double(config.economy.g0));
    emit("economy.r", format_double(config.economy.r));
    emit("economy.theta", format_double(config.economy.theta));
    emit("economy.mu0", format_double(config.economy.mu0));
    emit("economy.delta", format_double(config.economy.delta));
    emit("mac.alpha", format_double(config.curve.alpha));
    emit("mac.nu", format_double(config.curve.nu));
    emit("mac.reference_growth", format_double(config.mac_reference_growth));
    emit("grid.horizon", format_double(config.horizon));
    emit("grid.step", format_double(config.step));
    emit("goals_pgc", join(config.goals_pgc));
    emit("growth_rates", join(config.growth_rates));
    emit("pathway_kind", to_string(config.pathway_kind));
    std::string outputs;
    for (std::size_t i = 0; i < config.outputs.size(); ++i) {
        if (i > 0) {
            outputs += ", ";
        }
        outputs += to_string(config.outputs[i]);
    }
    emit("outputs", outputs);
    emit("tcre", format_double(config.tcre));
    emit("baseline_warming", format_double(config.baseline_warming));
    emit("cost_curve.k_max", format_double(config.cost_curve_k_max));
    emit("cost_curve.points", std::to_string(config.cost_curve_points));
    emit("power_law.goals_pgc", join(config.power_law_goals_pgc));
    return out;
}

}  // namespace decarb
