#pragma once

#include <vector>

#include "oos/distributions.hpp"

// Steady state of the M/G/1/N/N finite-source queue: N identical modules
// failing at rate alpha each, a single servicer, general service time S
// known through its mean and Laplace-Stieltjes transform. A failed module
// stops failing until its repair completes, so the system-level demand
// rate is state dependent.

namespace oos {

struct QueueInputs {
    int n_modules = 0;          // N
    double failure_rate = 0.0;  // alpha, per hour per module
    LstDistribution service;    // composite service time S

    void validate() const;
};

struct QueueSolution {
    double demand_rate = 0.0;  // lambda, repairs per hour
    double p0 = 0.0;           // probability the servicer is idle
    double mean_wait = 0.0;    // E[W], failure epoch to repair completion
};

/// log of the product coefficients B_n = prod_{i=1..n} (1 - L(i alpha)) / L(i alpha),
/// n = 0 .. N-1, where L is the service LST. B_0 = 1.
std::vector<double> log_b_coefficients(const QueueInputs& in);

/// B_n in linear scale (overflows only for inputs far outside the model's
/// operating range; prefer the log form inside other formulas).
std::vector<double> b_coefficients(const QueueInputs& in);

/// P0 = 1 / (1 + N E[S] alpha sum_n binom(N-1, n) B_n).
double p0(const QueueInputs& in);

/// lambda = (1 - P0) / E[S].
double demand_rate(const QueueInputs& in);

/// E[W] = N / lambda - 1/alpha - E[S_inbound]. The inbound leg is part of
/// the service time but not of the waiting time, hence the subtraction.
double mean_wait(int n_modules, double failure_rate, double lambda, double mean_inbound_h);

/// Convenience bundle of the three quantities above.
QueueSolution solve_queue(const QueueInputs& in, double mean_inbound_h);

}  // namespace oos
