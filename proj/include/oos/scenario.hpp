#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "oos/distributions.hpp"
#include "oos/inventory.hpp"
#include "oos/orbit.hpp"

namespace oos {

enum class ServiceComposition {
    /// One discrete atom per satellite covering outbound + inbound of the
    /// same trip, preserving their correlation through the satellite identity.
    JointTrip,
    /// Outbound and inbound treated as independent factors in the service
    /// LST product.
    IndependentProduct,
};

/// User-facing scenario description. Defaults describe the benchmark GEO
/// servicing case: 10 evenly spaced customer satellites of 5 modules each,
/// the depot collocated with satellite 0, monthly-scale resupply launches.
struct ScenarioConfig {
    ConstellationGeometry constellation;
    double mtbf_hours = 20000.0;                  // per module, 1/alpha
    double mean_launch_interval_hours = 1213.4;   // 1/beta
    double lead_time_hours = 2160.0;
    double repair_time_hours = 4.0;
    OrbitConstants orbit;
    std::vector<double> phi_req = {0.8, 0.85, 0.9, 0.95, 0.99, 0.995, 0.999};
    ServiceComposition service_composition = ServiceComposition::JointTrip;
    double pre_trip_hours = 0.0;   // added to every outbound leg
    double post_trip_hours = 0.0;  // added to every inbound leg

    void validate() const;
};

/// Scenario compiled into the quantities the submodels work with.
class ScenarioModel {
public:
    explicit ScenarioModel(const ScenarioConfig& config);

    int n_modules() const { return n_modules_; }
    double failure_rate() const { return alpha_; }
    double launch_rate() const { return beta_; }
    double lead_time_h() const { return lead_time_h_; }
    double repair_time_h() const { return repair_time_h_; }
    double mean_outbound_h() const { return mean_outbound_h_; }
    double mean_inbound_h() const { return mean_inbound_h_; }
    const std::vector<TravelAtom>& travel() const { return travel_; }
    const ConstellationGeometry& constellation() const { return constellation_; }
    ServiceComposition composition() const { return composition_; }

    /// Travel + repair portion of the service time (no stockout delay).
    const LstDistribution& base_service() const { return base_service_; }

    /// Full service time including the stockout delay.
    LstDistribution service_with(const StockoutModel& stockout) const;

private:
    int n_modules_;
    double alpha_;
    double beta_;
    double lead_time_h_;
    double repair_time_h_;
    double mean_outbound_h_;
    double mean_inbound_h_;
    std::vector<TravelAtom> travel_;
    ConstellationGeometry constellation_;
    ServiceComposition composition_;
    LstDistribution base_service_;
};

/// Thrown on malformed configuration input; carries the JSON field path.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path + ": " + message), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

/// Parse the scenario portion of a config document (which may also carry
/// "solver" and "simulation" blocks, see config.hpp). Unknown keys are
/// rejected so typos surface as errors rather than silently applied defaults.
ScenarioConfig scenario_from_json(const std::string& json_text);

ScenarioConfig load_scenario(const std::string& path);

}  // namespace oos
