#include <doctest.h>

#include <stdexcept>

#include "decarb/config.hpp"

using namespace decarb;

TEST_CASE("empty document yields the reference defaults") {
    const ScenarioConfig config = parse_config("");
    CHECK(config.economy.g0 == doctest::Approx(77.8));
    CHECK(config.economy.r == doctest::Approx(0.024));
    CHECK(config.economy.theta == doctest::Approx(0.75));
    CHECK(config.economy.mu0 == doctest::Approx(0.46));
    CHECK(config.economy.delta == 0.0);
    CHECK(config.curve.alpha == doctest::Approx(10.4));
    CHECK(config.curve.nu == doctest::Approx(2.4));
    CHECK(config.curve.mu0 == doctest::Approx(0.46));
    CHECK(config.horizon == doctest::Approx(100.0));
    CHECK(config.step == doctest::Approx(0.05));
    CHECK(config.goals_pgc == std::vector<double>{300.0, 600.0, 900.0, 1200.0});
    CHECK(config.growth_rates == std::vector<double>{0.012, 0.024, 0.036});
    CHECK(config.pathway_kind == PathwayChoice::quasi_stationary);
    CHECK(config.tcre == doctest::Approx(1.65));
    CHECK(config.baseline_warming == doctest::Approx(1.0));
}

TEST_CASE("comments, blank lines and overrides") {
    const ScenarioConfig config = parse_config(
        "# scenario\n"
        "\n"
        "economy.theta = 1.0   # no exogenous decarbonization\n"
        "economy.delta = 0.03\n"
        "goals_pgc = 300, 600\n"
        "pathway_kind = both\n"
        "outputs = pathway, burden, delay\n");
    CHECK(config.economy.theta == 1.0);
    CHECK(config.economy.delta == 0.03);
    CHECK(config.goals_pgc == std::vector<double>{300.0, 600.0});
    CHECK(config.pathway_kind == PathwayChoice::both);
    REQUIRE(config.outputs.size() == 3);
    CHECK(config.outputs[0] == OutputKind::pathway);
    CHECK(config.outputs[1] == OutputKind::burden);
    CHECK(config.outputs[2] == OutputKind::delay);
}

TEST_CASE("mu0 override keeps the curve reference in lockstep") {
    const ScenarioConfig config = parse_config("economy.mu0 = 0.5\n");
    CHECK(config.economy.mu0 == 0.5);
    CHECK(config.curve.mu0 == 0.5);
}

TEST_CASE("invalid configurations are rejected with context") {
    CHECK_THROWS_WITH_AS(parse_config("economy.theta = 1.2\n"),
                         doctest::Contains("theta"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config("unknown.key = 3\n"),
                         doctest::Contains("line 1"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_config("\n\npathway_kind = sideways\n"),
                         doctest::Contains("line 3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("economy.g0 = not_a_number\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("goals_pgc = \n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("grid.step = 0.3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("outputs = pathway, nonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("goals_pgc = -300\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_config("economy.g0\n"), std::invalid_argument);
}

TEST_CASE("serialize/parse round trip") {
    ScenarioConfig config;
    config.economy.theta = 0.625;
    config.economy.delta = 0.015;
    config.curve.nu = 2.75;
    config.step = 0.1;
    config.goals_pgc = {300.0, 600.0, 900.0, 1200.0};
    config.growth_rates = {0.017};
    config.pathway_kind = PathwayChoice::constant_rate;
    config.outputs = {OutputKind::expenditure, OutputKind::cost_curve,
                      OutputKind::power_law};
    config.cost_curve_points = 25;
    config.power_law_goals_pgc = {350.0, 500.0, 650.0};

    const std::string text = serialize_config(config);
    const ScenarioConfig reparsed = parse_config(text);
    CHECK(serialize_config(reparsed) == text);
    CHECK(reparsed.economy.theta == config.economy.theta);
    CHECK(reparsed.goals_pgc == config.goals_pgc);
    CHECK(reparsed.outputs == config.outputs);
    CHECK(reparsed.cost_curve_points == 25);
    CHECK(reparsed.power_law_goals_pgc == config.power_law_goals_pgc);
}

TEST_CASE("goal list round trip example") {
    const ScenarioConfig config = parse_config("goals_pgc = 300, 600, 900, 1200\n");
    const ScenarioConfig reparsed = parse_config(serialize_config(config));
    CHECK(reparsed.goals_pgc == std::vector<double>{300.0, 600.0, 900.0, 1200.0});
}
