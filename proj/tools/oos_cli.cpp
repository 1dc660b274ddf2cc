// Command-line front end: trade-curve analysis, simulation batches, and
// model-vs-simulation comparison reports from a JSON scenario config.
//
// Exit codes: 0 success, 2 configuration error, 3 at least one sweep point
// failed to converge (the report is still written).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "oos/config.hpp"
#include "oos/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitPartial = 3;

oos::RunConfig load_or_exit(const std::string& path) {
    try {
        return oos::load_run_config(path);
    } catch (const oos::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        std::exit(kExitConfig);
    }
}

void write_file_or_exit(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << path << "\n";
        std::exit(kExitConfig);
    }
    out << contents;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Servicing trade-space analysis: finite-source queue + order-up-to depot"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    int capacity = 0;
    std::optional<int> replications;
    std::optional<std::uint64_t> seed;
    std::string trace_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", config_path, "scenario config (JSON)")->required();
        cmd->add_option("--out", out_path, "output CSV path")->required();
    };

    CLI::App* analyze = app.add_subcommand("analyze", "fill-rate sweep -> waiting-time trade curve");
    add_common(analyze);

    CLI::App* simulate = app.add_subcommand("simulate", "simulation batch at a fixed depot capacity");
    add_common(simulate);
    simulate->add_option("--capacity", capacity, "depot capacity in units")->required();
    simulate->add_option("--replications", replications, "override replication count");
    simulate->add_option("--seed", seed, "override master RNG seed");
    simulate->add_option("--trace", trace_path, "per-event CSV trace of the first replication");

    CLI::App* compare = app.add_subcommand("compare", "model vs simulation at the solved capacities");
    add_common(compare);
    compare->add_option("--replications", replications, "override replication count");
    compare->add_option("--seed", seed, "override master RNG seed");

    CLI11_PARSE(app, argc, argv);

    oos::RunConfig config = load_or_exit(config_path);
    if (replications) config.sim.replications = *replications;
    if (seed) config.sim.rng_seed = *seed;

    try {
        const oos::ScenarioModel model(config.scenario);

        if (analyze->parsed()) {
            const oos::Report report =
                oos::analyze_report(model, config.scenario.phi_req, config.solver);
            write_file_or_exit(out_path, report.csv);
            return report.all_converged ? kExitOk : kExitPartial;
        }

        if (simulate->parsed()) {
            if (capacity < 0) {
                std::cerr << "config error: --capacity must be >= 0\n";
                return kExitConfig;
            }
            std::ofstream trace_file;
            if (!trace_path.empty()) {
                trace_file.open(trace_path, std::ios::binary);
                if (!trace_file) {
                    std::cerr << "cannot open trace file: " << trace_path << "\n";
                    return kExitConfig;
                }
                config.sim.trace = &trace_file;
            }
            const oos::BatchResult batch = oos::run_batch(model, capacity, config.sim);
            write_file_or_exit(out_path, oos::simulate_csv(batch));
            return kExitOk;
        }

        const oos::Report report =
            oos::compare_report(model, config.scenario.phi_req, config.solver, config.sim);
        write_file_or_exit(out_path, report.csv);
        return report.all_converged ? kExitOk : kExitPartial;
    } catch (const oos::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
