#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "oos/queueing.hpp"
#include "oos/simulator.hpp"
#include "oos/solver.hpp"

using namespace oos;

namespace {

ScenarioConfig benchmark_scenario(double mtbf) {
    ScenarioConfig config;
    config.mtbf_hours = mtbf;
    return config;
}

// Single-satellite ring: travel vanishes, so the simulation is exactly the
// finite-source queue with deterministic service equal to the repair time.
ScenarioConfig degenerate_scenario(int modules, double mtbf, double repair_h) {
    ScenarioConfig config;
    config.constellation = {1, modules, 0};
    config.mtbf_hours = mtbf;
    config.repair_time_hours = repair_h;
    return config;
}

}  // namespace

TEST_CASE("same seed reproduces a replication exactly") {
    const ScenarioModel model(benchmark_scenario(10000.0));
    SimConfig sim;
    sim.horizon_h = 50000.0;
    const auto a = run_replication(model, 20, sim, 12345);
    const auto b = run_replication(model, 20, sim, 12345);
    CHECK(a.mean_wait_h == b.mean_wait_h);
    CHECK(a.wait_samples == b.wait_samples);
    CHECK(a.observed_fill_rate == b.observed_fill_rate);
    CHECK(a.failures == b.failures);
    CHECK(a.deliveries == b.deliveries);
    const auto c = run_replication(model, 20, sim, 54321);
    CHECK(a.mean_wait_h != c.mean_wait_h);
}

TEST_CASE("batches are deterministic in the master seed") {
    const ScenarioModel model(benchmark_scenario(20000.0));
    SimConfig sim;
    sim.horizon_h = 20000.0;
    sim.replications = 12;
    const auto a = run_batch(model, 17, sim);
    const auto b = run_batch(model, 17, sim);
    CHECK(a.mean_wait_h == b.mean_wait_h);
    CHECK(a.std_error_h == b.std_error_h);
    for (std::size_t i = 0; i < a.replications.size(); ++i) {
        CHECK(a.replications[i].mean_wait_h == b.replications[i].mean_wait_h);
    }
}

TEST_CASE("replication seeds differ across indices") {
    CHECK(replication_seed(1, 0) != replication_seed(1, 1));
    CHECK(replication_seed(1, 0) != replication_seed(2, 0));
}

TEST_CASE("zero capacity never fills a demand") {
    const ScenarioModel model(benchmark_scenario(10000.0));
    SimConfig sim;
    sim.horizon_h = 100000.0;
    const auto out = run_replication(model, 0, sim, 99);
    CHECK(out.observed_fill_rate == 0.0);
    CHECK(out.wait_samples == 0);
    CHECK(out.failures > 0);
}

TEST_CASE("near-zero traffic waits are just travel plus repair") {
    ScenarioConfig config = benchmark_scenario(20000.0 * 1000.0);
    const ScenarioModel model(config);
    SimConfig sim;
    sim.horizon_h = 2.0e8;
    const auto out = run_replication(model, 50, sim, 4242);
    REQUIRE(out.wait_samples > 20);
    const double expected = model.mean_outbound_h() + model.repair_time_h();
    CHECK(out.mean_wait_h == doctest::Approx(expected).epsilon(0.15));
}

TEST_CASE("doubling replications shrinks the standard error like the CLT") {
    const ScenarioModel model(benchmark_scenario(10000.0));
    SimConfig sim;
    sim.horizon_h = 200000.0;
    sim.replications = 60;
    const auto small = run_batch(model, 32, sim);
    sim.replications = 240;  // 4x: expect the standard error to halve
    const auto big = run_batch(model, 32, sim);
    const double ratio = big.std_error_h / small.std_error_h;
    CHECK(ratio == doctest::Approx(0.5).epsilon(0.35));
}

TEST_CASE("ample stock reproduces the no-stockout queue") {
    const ScenarioModel model(benchmark_scenario(20000.0));
    SimConfig sim;
    sim.replications = 120;
    const auto batch = run_batch(model, 10000, sim);
    const auto reference = solve_no_stockout(model);
    CHECK(std::abs(batch.mean_wait_h - reference.mean_wait_h) <= 3.0 * batch.std_error_h);
    CHECK(batch.observed_fill_rate == doctest::Approx(1.0));
}

TEST_CASE("degenerate single-satellite ring matches the queue's idle fraction") {
    // deterministic service 20 h, no travel: idle fraction = P0
    const ScenarioModel model(degenerate_scenario(5, 10000.0, 20.0));
    QueueInputs queue{5, 1e-4, LstDistribution::point_mass(20.0)};
    const double p0_expected = p0(queue);
    SimConfig sim;
    sim.horizon_h = 1.0e7;
    sim.replications = 1;
    const auto batch = run_batch(model, 100000, sim);
    CHECK(1.0 - batch.servicer_utilization == doctest::Approx(p0_expected).epsilon(2e-3));
}

TEST_CASE("per-event trace is emitted when requested") {
    const ScenarioModel model(benchmark_scenario(10000.0));
    std::ostringstream trace;
    SimConfig sim;
    sim.horizon_h = 20000.0;
    sim.trace = &trace;
    (void)run_replication(model, 10, sim, 7);
    const std::string text = trace.str();
    CHECK(text.find("failure") != std::string::npos);
    CHECK(text.find("review") != std::string::npos);
    // columns: time,event,module,queue,on_hand,backorders
    CHECK(std::count(text.begin(), text.end(), '\n') > 10);
}

TEST_CASE("state invariants hold across randomized scenarios") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> sats(1, 12);
    std::uniform_int_distribution<int> mods(1, 6);
    std::uniform_int_distribution<int> cap(0, 30);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 12; ++trial) {
        ScenarioConfig config;
        const int n_sats = sats(rng);
        config.constellation = {n_sats, mods(rng), std::min(n_sats - 1, 1)};
        config.mtbf_hours = 2000.0 + 30000.0 * u(rng);
        config.mean_launch_interval_hours = 300.0 + 2000.0 * u(rng);
        config.lead_time_hours = 3000.0 * u(rng);
        config.repair_time_hours = 10.0 * u(rng);
        const ScenarioModel model(config);
        SimConfig sim;
        sim.horizon_h = 50000.0;
        sim.check_invariants = true;  // throws std::logic_error on violation
        sim.rocket_capacity_enforced = trial % 2 == 0;
        const auto out = run_replication(model, cap(rng), sim, 1000 + trial);
        CHECK(out.wait_samples <= out.failures);
        CHECK(out.observed_fill_rate >= 0.0);
        CHECK(out.observed_fill_rate <= 1.0);
        CHECK(out.servicer_utilization >= 0.0);
        CHECK(out.servicer_utilization <= 1.0);
    }
}

TEST_CASE("warmup exclusion drops early samples") {
    const ScenarioModel model(benchmark_scenario(10000.0));
    SimConfig sim;
    sim.horizon_h = 100000.0;
    const auto full = run_replication(model, 30, sim, 5);
    sim.warmup_h = 50000.0;
    const auto tail = run_replication(model, 30, sim, 5);
    CHECK(tail.wait_samples < full.wait_samples);
    CHECK(tail.failures == full.failures);  // event stream itself is unchanged
}

TEST_CASE("invalid simulation configs are rejected up front") {
    const ScenarioModel model(benchmark_scenario(10000.0));
    SimConfig sim;
    sim.horizon_h = -1.0;
    CHECK_THROWS_AS(run_replication(model, 5, sim, 1), std::domain_error);
    SimConfig sim2;
    sim2.replications = 0;
    CHECK_THROWS_AS(run_batch(model, 5, sim2), std::domain_error);
    SimConfig sim3;
    CHECK_THROWS_AS(run_replication(model, -1, sim3, 1), std::domain_error);
}
