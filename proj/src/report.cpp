#include "oos/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace oos {

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

Report analyze_report(const ScenarioModel& model, const std::vector<double>& phi_reqs,
                      const SolverOptions& options) {
    std::ostringstream out;
    out << "phi_req,C,lambda_per_hour,E_S_stockout_h,E_W_h,converged,iterations,residual\n";

    const NoStockoutSolution ns = solve_no_stockout(model);
    out << ",inf," << format_number(ns.lambda) << ",0," << format_number(ns.mean_wait_h)
        << ",true,0,0\n";

    Report report;
    for (const AnalysisResult& r : sweep(model, phi_reqs, options)) {
        report.all_converged = report.all_converged && r.converged;
        out << format_number(r.phi_req) << ',' << r.capacity << ',' << format_number(r.lambda)
            << ',' << format_number(r.mean_stockout_h) << ',' << format_number(r.mean_wait_h)
            << ',' << (r.converged ? "true" : "false") << ',' << r.iterations << ','
            << format_number(r.residual) << '\n';
    }
    report.csv = out.str();
    return report;
}

std::string simulate_csv(const BatchResult& batch) {
    std::ostringstream out;
    out << "replication,mean_wait_h,std_error_h,wait_samples,observed_fill_rate,"
           "servicer_utilization,failures,deliveries\n";
    long failures = 0;
    long deliveries = 0;
    long samples = 0;
    for (std::size_t i = 0; i < batch.replications.size(); ++i) {
        const SimOutcome& r = batch.replications[i];
        out << i << ',' << format_number(r.mean_wait_h) << ",," << r.wait_samples << ','
            << format_number(r.observed_fill_rate) << ',' << format_number(r.servicer_utilization)
            << ',' << r.failures << ',' << r.deliveries << '\n';
        failures += r.failures;
        deliveries += r.deliveries;
        samples += r.wait_samples;
    }
    out << "aggregate," << format_number(batch.mean_wait_h) << ','
        << format_number(batch.std_error_h) << ',' << samples << ','
        << format_number(batch.observed_fill_rate) << ','
        << format_number(batch.servicer_utilization) << ',' << failures << ',' << deliveries
        << '\n';
    return out.str();
}

Report compare_report(const ScenarioModel& model, const std::vector<double>& phi_reqs,
                      const SolverOptions& solver_options, const SimConfig& sim_config) {
    std::ostringstream out;
    out << "phi_req,C,model_E_W_h,sim_E_W_h,sim_std_error_h,rel_error,observed_fill_rate\n";

    const NoStockoutSolution ns = solve_no_stockout(model);
    out << ",inf," << format_number(ns.mean_wait_h) << ",,,,\n";

    Report report;
    for (const AnalysisResult& r : sweep(model, phi_reqs, solver_options)) {
        if (!r.converged) {
            report.all_converged = false;
            out << format_number(r.phi_req) << ',' << r.capacity << ','
                << format_number(r.mean_wait_h) << ",,,unconverged,\n";
            continue;
        }
        const BatchResult batch = run_batch(model, r.capacity, sim_config);
        const double rel_error = std::abs(r.mean_wait_h - batch.mean_wait_h) / batch.mean_wait_h;
        out << format_number(r.phi_req) << ',' << r.capacity << ','
            << format_number(r.mean_wait_h) << ',' << format_number(batch.mean_wait_h) << ','
            << format_number(batch.std_error_h) << ',' << format_number(rel_error) << ','
            << format_number(batch.observed_fill_rate) << '\n';
    }
    report.csv = out.str();
    return report;
}

}  // namespace oos
