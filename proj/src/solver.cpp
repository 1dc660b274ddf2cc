#include "oos/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "oos/queueing.hpp"

namespace oos {

SolverOptions SolverOptions::benchmark_stopping() {
    SolverOptions opts;
    opts.lambda_step_abs_tol = 1e-4;
    opts.damping = 1.0;
    opts.warm_start = false;
    return opts;
}

NoStockoutSolution solve_no_stockout(const ScenarioModel& model) {
    QueueInputs in{model.n_modules(), model.failure_rate(), model.base_service()};
    const QueueSolution q = solve_queue(in, model.mean_inbound_h());
    return {q.demand_rate, q.mean_wait, q.p0};
}

namespace {

// One sweep of the coupled loop: capacity and stockout delay from the
// current lambda, then the queue's demand rate under that service time.
struct SweepResult {
    int capacity = 0;
    double lambda_out = 0.0;
    double mean_stockout_h = 0.0;
};

SweepResult coupled_sweep(const ScenarioModel& model, double phi_req, double lambda_in) {
    SweepResult r;
    r.capacity = min_capacity(phi_req, lambda_in, model.launch_rate(), model.lead_time_h());
    const StockoutModel stockout(r.capacity, lambda_in, model.launch_rate(), model.lead_time_h());
    r.mean_stockout_h = stockout.mean();
    QueueInputs in{model.n_modules(), model.failure_rate(), model.service_with(stockout)};
    r.lambda_out = demand_rate(in);
    return r;
}

AnalysisResult finish(const ScenarioModel& model, double phi_req, int capacity, double lambda,
                      double mean_stockout_h, bool converged, int iterations) {
    AnalysisResult out;
    out.phi_req = phi_req;
    out.capacity = capacity;
    out.lambda = lambda;
    out.phi_achieved = fill_rate(capacity, lambda, model.launch_rate(), model.lead_time_h());
    out.mean_stockout_h = mean_stockout_h;
    out.mean_service_h = mean_stockout_h + model.mean_outbound_h() + model.repair_time_h() +
                         model.mean_inbound_h();
    out.mean_wait_h = mean_wait(model.n_modules(), model.failure_rate(), lambda,
                                model.mean_inbound_h());
    out.mean_queue_wait_h = out.mean_wait_h - mean_stockout_h - model.mean_outbound_h() -
                            model.repair_time_h();
    out.converged = converged;
    out.iterations = iterations;
    // Re-evaluate the self-consistency residual rather than trusting the
    // iterator's last step.
    const SweepResult check = coupled_sweep(model, phi_req, lambda);
    out.residual = std::abs(lambda - check.lambda_out) / lambda;
    return out;
}

// Bracketing bisection on r(lambda) = lambda - g(lambda) over (0, N*alpha].
// r > 0 at the top (a finite-source queue's throughput is below N*alpha) and
// r < 0 for small enough lambda, so a sign change always exists.
AnalysisResult bisect_fallback(const ScenarioModel& model, double phi_req,
                               const SolverOptions& options, double lambda_hi, int used_iters) {
    double hi = lambda_hi;
    double lo = lambda_hi;
    double r_lo = 0.0;
    bool bracketed = false;
    for (int k = 0; k < 80; ++k) {
        lo *= 0.5;
        r_lo = lo - coupled_sweep(model, phi_req, lo).lambda_out;
        if (r_lo < 0.0) {
            bracketed = true;
            break;
        }
        hi = lo;
    }
    if (!bracketed) {
        AnalysisResult bad = finish(model, phi_req, coupled_sweep(model, phi_req, lo).capacity,
                                    lo, 0.0, false, used_iters);
        return bad;
    }
    double mid = lo;
    SweepResult mid_sweep;
    for (int k = 0; k < 200; ++k) {
        mid = 0.5 * (lo + hi);
        mid_sweep = coupled_sweep(model, phi_req, mid);
        const double r_mid = mid - mid_sweep.lambda_out;
        if (r_mid >= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
        if ((hi - lo) / hi < 1e-14) break;
    }
    mid_sweep = coupled_sweep(model, phi_req, hi);
    const bool ok = std::abs(hi - mid_sweep.lambda_out) / hi < options.residual_rel_tol * 10.0;
    return finish(model, phi_req, mid_sweep.capacity, mid_sweep.lambda_out,
                  mid_sweep.mean_stockout_h, ok, used_iters + 200);
}

}  // namespace

AnalysisResult solve_coupled(const ScenarioModel& model, double phi_req,
                             const SolverOptions& options, double lambda_start) {
    if (!(phi_req > 0.0) || !(phi_req < 1.0)) {
        throw std::domain_error("solve_coupled: phi_req outside (0, 1)");
    }

    const double lambda0 = lambda_start > 0.0 ? lambda_start : solve_no_stockout(model).lambda;
    const bool step_mode = options.lambda_step_abs_tol > 0.0;
    const double gamma = step_mode ? 1.0 : options.damping;

    double lambda = lambda0;
    int prev_capacity = -1;
    double prev_residual = 0.0;
    int oscillations = 0;

    for (int it = 1; it <= options.max_iterations; ++it) {
        const SweepResult sweep = coupled_sweep(model, phi_req, lambda);
        const double step = sweep.lambda_out - lambda;

        if (step_mode && std::abs(step) < options.lambda_step_abs_tol) {
            // Report the queue output of the final sweep together with the
            // capacity and stockout delay that produced it.
            return finish(model, phi_req, sweep.capacity, sweep.lambda_out,
                          sweep.mean_stockout_h, true, it);
        }
        if (!step_mode && std::abs(step) / lambda < options.residual_rel_tol &&
            sweep.capacity == prev_capacity) {
            // Guard against stopping astride a capacity boundary: the reported
            // lambda must reproduce the capacity it was computed with.
            const int cap_at_out = min_capacity(phi_req, sweep.lambda_out, model.launch_rate(),
                                                model.lead_time_h());
            if (cap_at_out == sweep.capacity) {
                return finish(model, phi_req, sweep.capacity, sweep.lambda_out,
                              sweep.mean_stockout_h, true, it);
            }
        }

        if (!step_mode) {
            if (prev_capacity >= 0 && step * prev_residual < 0.0 &&
                std::abs(step) >= std::abs(prev_residual)) {
                ++oscillations;
                if (oscillations >= 3) {
                    return bisect_fallback(model, phi_req, options, lambda0, it);
                }
            }
            prev_residual = step;
        }
        prev_capacity = sweep.capacity;
        lambda += gamma * step;
    }

    // Out of iterations: report the best iterate, flagged unconverged.
    const SweepResult last = coupled_sweep(model, phi_req, lambda);
    return finish(model, phi_req, last.capacity, last.lambda_out, last.mean_stockout_h, false,
                  options.max_iterations);
}

std::vector<AnalysisResult> sweep(const ScenarioModel& model, std::span<const double> phi_reqs,
                                  const SolverOptions& options) {
    std::vector<AnalysisResult> results;
    results.reserve(phi_reqs.size());
    double warm = 0.0;
    for (double phi : phi_reqs) {
        AnalysisResult res;
        try {
            res = solve_coupled(model, phi, options, options.warm_start ? warm : 0.0);
        } catch (const std::exception&) {
            res.phi_req = phi;
            res.converged = false;
        }
        if (res.converged && options.warm_start) warm = res.lambda;
        results.push_back(res);
    }
    return results;
}

}  // namespace oos
