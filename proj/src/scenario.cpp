#include "oos/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "oos/config.hpp"

namespace oos {

void ScenarioConfig::validate() const {
    if (constellation.n_satellites < 1) throw ConfigError("constellation.n_satellites", "must be >= 1");
    if (constellation.modules_per_satellite < 1) {
        throw ConfigError("constellation.modules_per_satellite", "must be >= 1");
    }
    if (constellation.depot_index < 0 || constellation.depot_index >= constellation.n_satellites) {
        throw ConfigError("constellation.depot_index", "must index a satellite");
    }
    if (!(mtbf_hours > 0.0)) throw ConfigError("mtbf_hours", "must be > 0");
    if (!(mean_launch_interval_hours > 0.0)) {
        throw ConfigError("mean_launch_interval_hours", "must be > 0");
    }
    if (lead_time_hours < 0.0) throw ConfigError("lead_time_hours", "must be >= 0");
    if (repair_time_hours < 0.0) throw ConfigError("repair_time_hours", "must be >= 0");
    if (pre_trip_hours < 0.0) throw ConfigError("pre_trip_hours", "must be >= 0");
    if (post_trip_hours < 0.0) throw ConfigError("post_trip_hours", "must be >= 0");
    if (!(orbit.r_target_km > 0.0)) throw ConfigError("orbit.r_target_km", "must be > 0");
    if (!(orbit.mu_km3_s2 > 0.0)) throw ConfigError("orbit.mu_km3_s2", "must be > 0");
    if (!(orbit.earth_radius_km > 0.0)) throw ConfigError("orbit.earth_radius_km", "must be > 0");
    if (!(orbit.h_crit_km > 0.0)) throw ConfigError("orbit.h_crit_km", "must be > 0");
    for (std::size_t i = 0; i < phi_req.size(); ++i) {
        if (!(phi_req[i] > 0.0) || !(phi_req[i] < 1.0)) {
            throw ConfigError("phi_req[" + std::to_string(i) + "]", "must lie in (0, 1)");
        }
    }
}

namespace {

LstDistribution make_base_service(const ScenarioConfig& config,
                                  const std::vector<TravelAtom>& travel) {
    std::vector<DiscreteDuration::Atom> out_atoms, in_atoms, trip_atoms;
    for (const auto& a : travel) {
        out_atoms.push_back({a.outbound_h, a.probability});
        in_atoms.push_back({a.inbound_h, a.probability});
        trip_atoms.push_back({a.outbound_h + a.inbound_h, a.probability});
    }
    const LstDistribution repair = LstDistribution::point_mass(config.repair_time_hours);
    if (config.service_composition == ServiceComposition::JointTrip) {
        return LstDistribution::sum_of(
            {LstDistribution::discrete(DiscreteDuration(std::move(trip_atoms))), repair});
    }
    return LstDistribution::sum_of(
        {LstDistribution::discrete(DiscreteDuration(std::move(out_atoms))), repair,
         LstDistribution::discrete(DiscreteDuration(std::move(in_atoms)))});
}

std::vector<TravelAtom> make_travel(const ScenarioConfig& config) {
    auto travel = build_travel_model(config.constellation, config.orbit);
    for (auto& a : travel) {
        a.outbound_h += config.pre_trip_hours;
        a.inbound_h += config.post_trip_hours;
    }
    return travel;
}

const ScenarioConfig& validated(const ScenarioConfig& config) {
    config.validate();
    return config;
}

}  // namespace

ScenarioModel::ScenarioModel(const ScenarioConfig& config)
    : n_modules_(validated(config).constellation.total_modules()),
      alpha_(1.0 / config.mtbf_hours),
      beta_(1.0 / config.mean_launch_interval_hours),
      lead_time_h_(config.lead_time_hours),
      repair_time_h_(config.repair_time_hours),
      travel_(make_travel(config)),
      constellation_(config.constellation),
      composition_(config.service_composition),
      base_service_(make_base_service(config, travel_)) {
    mean_outbound_h_ = 0.0;
    mean_inbound_h_ = 0.0;
    for (const auto& a : travel_) {
        mean_outbound_h_ += a.probability * a.outbound_h;
        mean_inbound_h_ += a.probability * a.inbound_h;
    }
}

LstDistribution ScenarioModel::service_with(const StockoutModel& stockout) const {
    return LstDistribution::sum_of({stockout.as_distribution(), base_service_});
}

// ---------------------------------------------------------------------------
// JSON ingestion
// ---------------------------------------------------------------------------

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw ConfigError(path, msg);
}

void expect_keys(const json& obj, const std::string& path, const std::set<std::string>& allowed) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (!allowed.contains(key)) {
            fail(path.empty() ? key : path + "." + key, "unknown field");
        }
    }
}

double get_number(const json& obj, const std::string& path, const std::string& key, double fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number()) fail(path + key, "expected a number");
    return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const std::string& key, int fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(path + key, "expected an integer");
    return v.get<int>();
}

bool get_bool(const json& obj, const std::string& path, const std::string& key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(path + key, "expected a boolean");
    return v.get<bool>();
}

ScenarioConfig parse_scenario(const json& doc) {
    ScenarioConfig config;

    if (doc.contains("constellation")) {
        const json& c = doc.at("constellation");
        if (!c.is_object()) fail("constellation", "expected an object");
        expect_keys(c, "constellation", {"n_satellites", "modules_per_satellite", "depot_index"});
        config.constellation.n_satellites =
            get_int(c, "constellation.", "n_satellites", config.constellation.n_satellites);
        config.constellation.modules_per_satellite = get_int(
            c, "constellation.", "modules_per_satellite", config.constellation.modules_per_satellite);
        config.constellation.depot_index =
            get_int(c, "constellation.", "depot_index", config.constellation.depot_index);
    }

    config.mtbf_hours = get_number(doc, "", "mtbf_hours", config.mtbf_hours);
    config.mean_launch_interval_hours =
        get_number(doc, "", "mean_launch_interval_hours", config.mean_launch_interval_hours);
    config.lead_time_hours = get_number(doc, "", "lead_time_hours", config.lead_time_hours);
    config.repair_time_hours = get_number(doc, "", "repair_time_hours", config.repair_time_hours);
    config.pre_trip_hours = get_number(doc, "", "pre_trip_hours", config.pre_trip_hours);
    config.post_trip_hours = get_number(doc, "", "post_trip_hours", config.post_trip_hours);

    if (doc.contains("orbit")) {
        const json& o = doc.at("orbit");
        if (!o.is_object()) fail("orbit", "expected an object");
        expect_keys(o, "orbit", {"r_target_km", "mu_km3_s2", "earth_radius_km", "h_crit_km"});
        config.orbit.r_target_km = get_number(o, "orbit.", "r_target_km", config.orbit.r_target_km);
        config.orbit.mu_km3_s2 = get_number(o, "orbit.", "mu_km3_s2", config.orbit.mu_km3_s2);
        config.orbit.earth_radius_km =
            get_number(o, "orbit.", "earth_radius_km", config.orbit.earth_radius_km);
        config.orbit.h_crit_km = get_number(o, "orbit.", "h_crit_km", config.orbit.h_crit_km);
    }

    if (doc.contains("phi_req")) {
        const json& p = doc.at("phi_req");
        if (!p.is_array()) fail("phi_req", "expected an array of numbers");
        config.phi_req.clear();
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (!p[i].is_number()) fail("phi_req[" + std::to_string(i) + "]", "expected a number");
            config.phi_req.push_back(p[i].get<double>());
        }
    }

    if (doc.contains("service_composition")) {
        const json& s = doc.at("service_composition");
        if (!s.is_string()) fail("service_composition", "expected a string");
        const std::string mode = s.get<std::string>();
        if (mode == "joint-trip") {
            config.service_composition = ServiceComposition::JointTrip;
        } else if (mode == "independent-product") {
            config.service_composition = ServiceComposition::IndependentProduct;
        } else {
            fail("service_composition", "expected \"joint-trip\" or \"independent-product\"");
        }
    }

    config.validate();
    return config;
}

SolverOptions parse_solver(const json& doc) {
    SolverOptions opts;
    if (!doc.contains("solver")) return opts;
    const json& s = doc.at("solver");
    if (!s.is_object()) fail("solver", "expected an object");
    expect_keys(s, "solver",
                {"residual_rel_tol", "lambda_step_abs_tol", "max_iterations", "damping",
                 "warm_start"});
    opts.residual_rel_tol = get_number(s, "solver.", "residual_rel_tol", opts.residual_rel_tol);
    opts.lambda_step_abs_tol =
        get_number(s, "solver.", "lambda_step_abs_tol", opts.lambda_step_abs_tol);
    opts.max_iterations = get_int(s, "solver.", "max_iterations", opts.max_iterations);
    opts.damping = get_number(s, "solver.", "damping", opts.damping);
    opts.warm_start = get_bool(s, "solver.", "warm_start", opts.warm_start);
    if (!(opts.residual_rel_tol > 0.0)) fail("solver.residual_rel_tol", "must be > 0");
    if (opts.lambda_step_abs_tol < 0.0) fail("solver.lambda_step_abs_tol", "must be >= 0");
    if (opts.max_iterations < 1) fail("solver.max_iterations", "must be >= 1");
    if (!(opts.damping > 0.0) || opts.damping > 1.0) fail("solver.damping", "must lie in (0, 1]");
    return opts;
}

SimConfig parse_sim(const json& doc) {
    SimConfig sim;
    if (!doc.contains("simulation")) return sim;
    const json& s = doc.at("simulation");
    if (!s.is_object()) fail("simulation", "expected an object");
    expect_keys(s, "simulation",
                {"horizon_hours", "replications", "seed", "rocket_capacity_enforced",
                 "warmup_hours"});
    sim.horizon_h = get_number(s, "simulation.", "horizon_hours", sim.horizon_h);
    sim.replications = get_int(s, "simulation.", "replications", sim.replications);
    if (s.contains("seed")) {
        const json& v = s.at("seed");
        if (!v.is_number_unsigned() && !v.is_number_integer()) fail("simulation.seed", "expected an integer");
        sim.rng_seed = v.get<std::uint64_t>();
    }
    sim.rocket_capacity_enforced =
        get_bool(s, "simulation.", "rocket_capacity_enforced", sim.rocket_capacity_enforced);
    sim.warmup_h = get_number(s, "simulation.", "warmup_hours", sim.warmup_h);
    try {
        sim.validate();
    } catch (const std::exception& e) {
        fail("simulation", e.what());
    }
    return sim;
}

json parse_document(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError("(document)", e.what());
    }
    if (!doc.is_object()) throw ConfigError("(document)", "top level must be an object");
    expect_keys(doc, "",
                {"constellation", "mtbf_hours", "mean_launch_interval_hours", "lead_time_hours",
                 "repair_time_hours", "pre_trip_hours", "post_trip_hours", "orbit", "phi_req",
                 "service_composition", "solver", "simulation"});
    return doc;
}

}  // namespace

ScenarioConfig scenario_from_json(const std::string& json_text) {
    return parse_scenario(parse_document(json_text));
}

ScenarioConfig load_scenario(const std::string& path) {
    return load_run_config(path).scenario;
}

RunConfig run_config_from_json(const std::string& json_text) {
    const json doc = parse_document(json_text);
    RunConfig config;
    config.scenario = parse_scenario(doc);
    config.solver = parse_solver(doc);
    config.sim = parse_sim(doc);
    return config;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("(file)", "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_config_from_json(buf.str());
}

}  // namespace oos
