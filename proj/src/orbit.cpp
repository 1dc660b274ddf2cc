#include "oos/orbit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oos {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

double OrbitConstants::period_h() const {
    return kTwoPi * std::sqrt(r_target_km * r_target_km * r_target_km / mu_km3_s2) / 3600.0;
}

PhasingSolution phasing_travel_time(double delta_theta, const OrbitConstants& consts) {
    if (delta_theta < 0.0 || delta_theta >= kTwoPi) {
        throw std::domain_error("phasing_travel_time: delta_theta outside [0, 2*pi)");
    }
    if (consts.r_target_km <= 0.0 || consts.mu_km3_s2 <= 0.0) {
        throw std::domain_error("phasing_travel_time: nonpositive orbit constants");
    }

    PhasingSolution sol;
    sol.delta_theta = delta_theta;
    if (delta_theta == 0.0) {
        return sol;  // already at the target
    }

    // seconds for the target to sweep one radian
    const double tau_s = std::sqrt(std::pow(consts.r_target_km, 3) / consts.mu_km3_s2);
    const double a_min = (consts.r_target_km + consts.earth_radius_km + consts.h_crit_km) / 2.0;
    // A phasing orbit of x target-revolutions per chaser revolution has
    // a = x^(2/3) * r; k1 = 1 maximizes a, so feasibility of a given k2
    // reduces to (dtheta + 2*pi*k2) / (2*pi) >= (a_min / r)^(3/2).
    const double min_revs = std::pow(a_min / consts.r_target_km, 1.5);

    int k2 = 0;
    while ((delta_theta + kTwoPi * k2) / kTwoPi < min_revs) {
        ++k2;
    }
    const double sweep = delta_theta + kTwoPi * k2;
    sol.k2 = k2;
    sol.travel_time_h = sweep * tau_s / 3600.0;

    // Feasible k1 range; pick the one with |a - r_target| smallest.
    const int k1_max = std::max(1, static_cast<int>(std::floor(sweep / (kTwoPi * min_revs))));
    int best_k1 = 1;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int k1 = 1; k1 <= k1_max; ++k1) {
        const double a = std::pow(sweep / (kTwoPi * k1), 2.0 / 3.0) * consts.r_target_km;
        if (a < a_min) break;  // a decreases with k1
        const double gap = std::abs(a - consts.r_target_km);
        if (gap < best_gap) {
            best_gap = gap;
            best_k1 = k1;
            sol.semimajor_axis_km = a;
        }
    }
    sol.k1 = best_k1;
    return sol;
}

double ConstellationGeometry::angle_of(int satellite) const {
    if (satellite < 0 || satellite >= n_satellites) {
        throw std::out_of_range("ConstellationGeometry::angle_of");
    }
    const int offset = (satellite - depot_index + n_satellites) % n_satellites;
    return kTwoPi * static_cast<double>(offset) / static_cast<double>(n_satellites);
}

std::vector<TravelAtom> build_travel_model(const ConstellationGeometry& geom,
                                           const OrbitConstants& consts) {
    if (geom.n_satellites < 1 || geom.modules_per_satellite < 1) {
        throw std::invalid_argument("build_travel_model: empty constellation");
    }
    if (geom.depot_index < 0 || geom.depot_index >= geom.n_satellites) {
        throw std::invalid_argument("build_travel_model: depot_index out of range");
    }
    std::vector<TravelAtom> atoms;
    atoms.reserve(geom.n_satellites);
    const double p = 1.0 / static_cast<double>(geom.n_satellites);
    for (int i = 0; i < geom.n_satellites; ++i) {
        // Outbound separation is the target's angle ahead of the depot;
        // inbound is the complement for the trip home.
        const double out_angle = geom.angle_of(i);
        const double in_angle = out_angle == 0.0 ? 0.0 : kTwoPi - out_angle;
        TravelAtom atom;
        atom.satellite = i;
        atom.outbound_h = phasing_travel_time(out_angle, consts).travel_time_h;
        atom.inbound_h = phasing_travel_time(in_angle, consts).travel_time_h;
        atom.probability = p;
        atoms.push_back(atom);
    }
    return atoms;
}

}  // namespace oos
