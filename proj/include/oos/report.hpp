#pragma once

#include <string>
#include <vector>

#include "oos/config.hpp"
#include "oos/simulator.hpp"
#include "oos/solver.hpp"

// CSV report builders behind the CLI commands. All numeric fields are
// written with six significant digits ("%.6g"), which is also the
// round-trip contract for re-parsing the files.

namespace oos {

/// Six-significant-digit formatting used in every report.
std::string format_number(double value);

struct Report {
    std::string csv;
    bool all_converged = true;
};

/// Fill-rate sweep: one row per requirement plus a leading no-stockout
/// reference row whose capacity is marked "inf".
/// Columns: phi_req,C,lambda_per_hour,E_S_stockout_h,E_W_h,converged,iterations,residual
Report analyze_report(const ScenarioModel& model, const std::vector<double>& phi_reqs,
                      const SolverOptions& options);

/// Per-replication means plus a trailing "aggregate" row carrying the
/// batch mean, its standard error, observed fill rate, and utilization.
std::string simulate_csv(const BatchResult& batch);

/// Model-vs-simulation comparison at the solver's capacity for each
/// requirement, plus the no-stockout reference row.
Report compare_report(const ScenarioModel& model, const std::vector<double>& phi_reqs,
                      const SolverOptions& solver_options, const SimConfig& sim_config);

}  // namespace oos
