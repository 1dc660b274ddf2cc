#include "oos/queueing.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "oos/numeric.hpp"

namespace oos {

void QueueInputs::validate() const {
    if (n_modules < 1) throw std::domain_error("QueueInputs: N < 1");
    if (failure_rate <= 0.0) throw std::domain_error("QueueInputs: alpha <= 0");
    if (!(service.mean() > 0.0)) throw std::domain_error("QueueInputs: service mean <= 0");
}

std::vector<double> log_b_coefficients(const QueueInputs& in) {
    in.validate();
    std::vector<double> log_b(in.n_modules);
    log_b[0] = 0.0;
    double acc = 0.0;
    for (int n = 1; n < in.n_modules; ++n) {
        const double L = in.service.lst(n * in.failure_rate);
        if (!(L > 0.0) || !(L < 1.0)) {
            throw std::domain_error("log_b_coefficients: service LST out of (0,1) at theta=" +
                                    std::to_string(n * in.failure_rate) + " (value " +
                                    std::to_string(L) + ")");
        }
        acc += std::log1p(-L) - std::log(L);
        log_b[n] = acc;
    }
    return log_b;
}

std::vector<double> b_coefficients(const QueueInputs& in) {
    auto log_b = log_b_coefficients(in);
    for (double& v : log_b) v = std::exp(v);
    return log_b;
}

namespace {

// log( N E[S] alpha sum_{n=0}^{N-1} binom(N-1,n) B_n )
double log_busy_term(const QueueInputs& in) {
    const auto log_b = log_b_coefficients(in);
    std::vector<double> terms(log_b.size());
    const double lg_n = std::lgamma(static_cast<double>(in.n_modules));
    for (std::size_t n = 0; n < log_b.size(); ++n) {
        // log binom(N-1, n) via log-gamma so N in the hundreds cannot overflow
        const double log_binom = lg_n - std::lgamma(static_cast<double>(n + 1)) -
                                 std::lgamma(static_cast<double>(in.n_modules - n));
        terms[n] = log_binom + log_b[n];
    }
    return std::log(in.n_modules * in.service.mean() * in.failure_rate) + log_sum_exp(terms);
}

}  // namespace

double p0(const QueueInputs& in) {
    const double ls = log_busy_term(in);
    // P0 = 1 / (1 + e^ls), evaluated as exp(-softplus(ls)).
    return std::exp(-log1p_exp(ls));
}

double demand_rate(const QueueInputs& in) {
    const double ls = log_busy_term(in);
    // 1 - P0 = e^ls / (1 + e^ls)
    const double one_minus_p0 = std::exp(ls - log1p_exp(ls));
    return one_minus_p0 / in.service.mean();
}

double mean_wait(int n_modules, double failure_rate, double lambda, double mean_inbound_h) {
    if (lambda <= 0.0) throw std::domain_error("mean_wait: lambda <= 0");
    if (failure_rate <= 0.0) throw std::domain_error("mean_wait: alpha <= 0");
    const double w = n_modules / lambda - 1.0 / failure_rate - mean_inbound_h;
    if (w < -1e-9 * (n_modules / lambda)) {
        throw std::domain_error("mean_wait: negative result, inconsistent inputs");
    }
    return w;
}

QueueSolution solve_queue(const QueueInputs& in, double mean_inbound_h) {
    const double ls = log_busy_term(in);
    QueueSolution out;
    out.p0 = std::exp(-log1p_exp(ls));
    out.demand_rate = std::exp(ls - log1p_exp(ls)) / in.service.mean();
    out.mean_wait = mean_wait(in.n_modules, in.failure_rate, out.demand_rate, mean_inbound_h);
    return out;
}

}  // namespace oos
