#pragma once

#include <string>

#include "oos/scenario.hpp"
#include "oos/simulator.hpp"
#include "oos/solver.hpp"

namespace oos {

/// Full configuration document: the scenario plus optional "solver" and
/// "simulation" blocks overriding the built-in defaults.
struct RunConfig {
    ScenarioConfig scenario;
    SolverOptions solver;
    SimConfig sim;
};

RunConfig run_config_from_json(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

}  // namespace oos
