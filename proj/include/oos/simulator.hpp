#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "oos/scenario.hpp"

// Discrete-event simulation of the full concept of operations, used as the
// validation oracle for the analytical model. Modules fail after
// exponential lifetimes, failures queue FCFS for the single servicer, and
// the depot runs the order-up-to policy with exponential review intervals,
// a constant lead time, and (by default) a rocket capacity ceiling.

namespace oos {

struct SimConfig {
    double horizon_h = 200000.0;
    int replications = 500;
    std::uint64_t rng_seed = 20240817;
    bool rocket_capacity_enforced = true;
    /// Statistics ignore failures and demand decisions before this time.
    double warmup_h = 0.0;
    /// Cheap per-event state checks; throws std::logic_error on violation.
    bool check_invariants = true;
    /// Per-event CSV trace (time, event, module, queue length, on hand,
    /// backorders). Used by run_replication; run_batch traces only the
    /// first replication.
    std::ostream* trace = nullptr;

    void validate() const;
};

struct SimOutcome {
    double mean_wait_h = 0.0;        // failure epoch to repair completion
    long wait_samples = 0;
    double observed_fill_rate = 0.0; // demands finding stock at service start
    double servicer_utilization = 0.0;
    long failures = 0;
    long deliveries = 0;
};

struct BatchResult {
    double mean_wait_h = 0.0;   // mean of the replication means
    double std_error_h = 0.0;   // standard error across replications
    double observed_fill_rate = 0.0;
    double servicer_utilization = 0.0;
    std::vector<SimOutcome> replications;
};

/// Deterministic per-replication seed derived from the master seed.
std::uint64_t replication_seed(std::uint64_t master_seed, int replication_index);

/// One replication with an explicit seed. Initial state: all modules
/// operational, depot full at `capacity`, no in-flight orders, servicer
/// idle at the depot.
SimOutcome run_replication(const ScenarioModel& model, int capacity, const SimConfig& config,
                           std::uint64_t seed);

/// All replications under substream seeds; aggregate statistics are taken
/// over the replication means.
BatchResult run_batch(const ScenarioModel& model, int capacity, const SimConfig& config);

}  // namespace oos
