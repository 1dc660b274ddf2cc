#pragma once

#include <vector>

// Phasing-maneuver travel times at a circular orbit. A chaser at angular
// separation dtheta behind its target enters a phasing orbit of semimajor
// axis a and meets the target after the target has swept dtheta + 2*pi*k2
// radians; k1 counts chaser revolutions on the phasing orbit. The phasing
// orbit must stay above a minimum-altitude floor.

namespace oos {

struct OrbitConstants {
    double r_target_km = 42164.0;        // circular orbit radius
    double mu_km3_s2 = 398600.4418;      // Earth gravitational parameter
    double earth_radius_km = 6378.14;
    double h_crit_km = 10000.0;          // minimum phasing-orbit altitude

    /// Target orbital period, hours.
    double period_h() const;
};

struct PhasingSolution {
    double delta_theta = 0.0;       // radians, in [0, 2*pi)
    int k1 = -1;                    // chaser revolutions; -1 when no maneuver
    int k2 = -1;                    // target revolutions; -1 when no maneuver
    double semimajor_axis_km = 0.0; // 0 when no maneuver
    double travel_time_h = 0.0;
};

/// Minimum-travel-time phasing solution for separation delta_theta in
/// [0, 2*pi): the smallest k2 >= 0 admitting a feasible k1 >= 1 under the
/// altitude floor. Among feasible k1 the one keeping the phasing orbit
/// closest to the target radius is reported (travel time does not depend
/// on k1). delta_theta == 0 means the chaser is already at the target.
PhasingSolution phasing_travel_time(double delta_theta, const OrbitConstants& consts);

struct ConstellationGeometry {
    int n_satellites = 10;
    int modules_per_satellite = 5;
    int depot_index = 0;  // the depot is collocated with this satellite

    int total_modules() const { return n_satellites * modules_per_satellite; }
    /// Angular position of satellite i, radians from the depot satellite.
    double angle_of(int satellite) const;
};

/// One satellite's round trip as seen from the depot. Outbound phases to
/// the satellite, inbound phases back over the complementary angle;
/// keeping both legs in one atom preserves their per-trip correlation.
struct TravelAtom {
    int satellite = 0;
    double outbound_h = 0.0;
    double inbound_h = 0.0;
    double probability = 0.0;
};

/// Travel model for an evenly spaced constellation with identical modules:
/// one atom per satellite, each with probability 1/n_satellites.
std::vector<TravelAtom> build_travel_model(const ConstellationGeometry& geom,
                                           const OrbitConstants& consts);

}  // namespace oos
