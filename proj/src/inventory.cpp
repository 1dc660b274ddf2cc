#include "oos/inventory.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <vector>

#include "oos/numeric.hpp"

namespace oos {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void validate_rates(double lambda, double beta, double lead_time_h) {
    if (!(lambda > 0.0)) throw std::domain_error("inventory: lambda <= 0");
    if (!(beta > 0.0)) throw std::domain_error("inventory: beta <= 0");
    if (lead_time_h < 0.0) throw std::domain_error("inventory: lead time < 0");
}
}  // namespace

void InventoryInputs::validate() const {
    validate_rates(lambda, beta, lead_time_h);
    if (capacity < 0) throw std::domain_error("inventory: capacity < 0");
}

double fill_rate(int capacity, double lambda, double beta, double lead_time_h) {
    validate_rates(lambda, beta, lead_time_h);
    if (capacity < 0) throw std::domain_error("fill_rate: capacity < 0");

    const double lam_l = lambda * lead_time_h;
    const double x = (beta + lambda) * lead_time_h;

    // First bracket term: e^{-lam L} (lam/(b+lam))^C (lam/b) sum_{j<=C} x^j/j!
    const double log_t1 = -lam_l + capacity * (std::log(lambda) - std::log(beta + lambda)) +
                          std::log(lambda / beta) + log_exp_series_partial_sum(capacity, x);
    const double t1 = std::exp(log_t1);

    // 1 - e^{-lam L} sum_{j=0}^{C-1} (lam L)^j/j!  ==  P(C, lam L); empty sum for C = 0.
    const double p_c = capacity > 0 ? gamma_lower_reg(static_cast<double>(capacity), lam_l) : 1.0;
    const double p_c1 = gamma_lower_reg(static_cast<double>(capacity) + 1.0, lam_l);

    const double bracket = t1 + lam_l * p_c + (lambda / beta - capacity) * p_c1;
    double phi = 1.0 - (beta / lambda) * bracket;
    // Clamp only numerical spillover across the boundaries.
    if (phi > 1.0 && phi < 1.0 + 1e-9) phi = 1.0;
    return phi;
}

int min_capacity(double phi_req, double lambda, double beta, double lead_time_h) {
    if (!(phi_req > 0.0) || !(phi_req < 1.0)) {
        throw std::domain_error("min_capacity: phi_req outside (0, 1)");
    }
    // Phi is monotone nondecreasing in C and tends to 1, so the scan ends.
    for (int c = 0; c <= 10'000'000; ++c) {
        if (fill_rate(c, lambda, beta, lead_time_h) >= phi_req) return c;
    }
    throw std::runtime_error("min_capacity: capacity search exceeded 1e7 units");
}

namespace {

// log of int_0^L s^C e^{-mu s} ds for any sign of mu. For mu <= 0 the
// expansion of e^{|mu| s} gives a series of positive terms.
double log_truncated_power_exp_integral(int capacity, double mu, double lead_time_h) {
    const double a = capacity + 1.0;
    if (lead_time_h == 0.0) return kNegInf;
    if (mu > 0.0) {
        return -a * std::log(mu) + std::lgamma(a) + log_gamma_lower_reg(a, mu * lead_time_h);
    }
    if (mu == 0.0) {
        return a * std::log(lead_time_h) - std::log(a);
    }
    const double nu_l = -mu * lead_time_h;
    const double log_nu_l = std::log(nu_l);
    // L^a * sum_m (nu L)^m / (m! (a + m))
    double acc = -std::log(a);  // m = 0
    double log_pow = 0.0;
    double peak = acc;
    for (int m = 1; m < 100000; ++m) {
        log_pow += log_nu_l - std::log(static_cast<double>(m));
        const double term = log_pow - std::log(a + m);
        acc = log_add_exp(acc, term);
        peak = std::max(peak, term);
        if (m > nu_l && term < peak - 45.0) break;
    }
    return a * std::log(lead_time_h) + acc;
}

// {L * f_max(Tl + L - Ts, 0)}(theta): the transform of the raw shortfall
// before the beta/lambda mixture. Split at Ts = L:
//   beta/(beta+theta) * J1 + Q(C+1, lambda L) - theta/(beta+theta) * J3
// with J1 the below-L piece and J3 the exponential tail overlap. Every
// piece is O(1) and nonnegative, so no catastrophic cancellation occurs
// even when theta is at or beyond lambda.
double shortfall_lst(double theta, int capacity, double lambda, double beta,
                     double lead_time_h) {
    if (theta == 0.0) return 1.0;
    const double a = capacity + 1.0;
    const double mu = lambda - theta;

    const double log_j1 = -theta * lead_time_h + a * std::log(lambda) - std::lgamma(a) +
                          log_truncated_power_exp_integral(capacity, mu, lead_time_h);
    const double j1 = std::exp(log_j1);

    const double q_lam_l = gamma_upper_reg(a, lambda * lead_time_h);

    const double log_j3 = beta * lead_time_h + a * (std::log(lambda) - std::log(lambda + beta)) +
                          log_gamma_upper_reg(a, (lambda + beta) * lead_time_h);
    const double j3 = std::exp(log_j3);

    return beta / (beta + theta) * j1 + q_lam_l - theta / (beta + theta) * j3;
}

double clamped_mixture_weight(double lambda, double beta) {
    return beta >= lambda ? 1.0 : beta / lambda;
}

}  // namespace

double stockout_lst(double theta, int capacity, double lambda, double beta, double lead_time_h) {
    validate_rates(lambda, beta, lead_time_h);
    if (capacity < 0) throw std::domain_error("stockout_lst: capacity < 0");
    if (theta <= -beta) throw std::domain_error("stockout_lst: theta <= -beta");
    const double p = clamped_mixture_weight(lambda, beta);
    return p * shortfall_lst(theta, capacity, lambda, beta, lead_time_h) + (1.0 - p);
}

double stockout_lst_reference(double theta, int capacity, double lambda, double beta,
                              double lead_time_h) {
    validate_rates(lambda, beta, lead_time_h);
    if (capacity < 0) throw std::domain_error("stockout_lst_reference: capacity < 0");
    if (theta < 0.0) throw std::domain_error("stockout_lst_reference: theta < 0");
    if (theta == 0.0) return 1.0;

    // Removable singularity at theta == lambda: symmetric perturbation average.
    if (std::abs(lambda - theta) < 1e-12 * lambda) {
        const double h = 1e-7 * lambda;
        return 0.5 * (stockout_lst_reference(theta - h, capacity, lambda, beta, lead_time_h) +
                      stockout_lst_reference(theta + h, capacity, lambda, beta, lead_time_h));
    }

    const double mu = lambda - theta;
    const double sign_mu = mu > 0.0 ? 1.0 : -1.0;
    const double log_abs_mu = std::log(std::abs(mu));
    const double x = (beta + lambda) * lead_time_h;
    const double log_bl = std::log(beta + lambda);

    std::vector<SignedLogTerm> terms;
    terms.reserve(2 * capacity + 3);

    // Leading product: (beta/(beta+theta)) (lambda/(lambda-theta))^{C+1} e^{-theta L}
    const double pow_sign = (capacity + 1) % 2 == 0 ? 1.0 : sign_mu;
    terms.push_back({pow_sign,
                     {std::log(beta) - std::log(beta + theta),
                      (capacity + 1) * (std::log(lambda) - log_abs_mu), -theta * lead_time_h}});

    // The bracket's subtracted sum, with the leading product distributed in:
    // -beta e^{-lambda L} lambda^{C+1} (lambda-theta)^{n-C-1} (beta+lambda)^{-(n+1)} S_n
    double log_s_n = 0.0;  // log sum_{i<=n} x^i/i!, built incrementally
    double log_x_pow = 0.0;
    for (int n = 0; n <= capacity; ++n) {
        if (n > 0) {
            log_x_pow += std::log(x) - std::log(static_cast<double>(n));
            log_s_n = log_add_exp(log_s_n, log_x_pow);
        }
        const int recip_pow = capacity + 1 - n;
        const double term_sign = -(recip_pow % 2 == 0 ? 1.0 : sign_mu);
        terms.push_back({term_sign,
                         {std::log(beta), -lambda * lead_time_h,
                          (capacity + 1) * std::log(lambda), (n - capacity - 1) * log_abs_mu,
                          -(n + 1) * log_bl, log_s_n}});
        // Final standalone sum of the closed form shares S_n.
        terms.push_back({1.0,
                         {-lambda * lead_time_h, std::log(beta), n * std::log(lambda),
                          -(n + 1) * log_bl, log_s_n}});
    }

    const double shortfall = log_domain_sum_of_products(terms);
    const double p = clamped_mixture_weight(lambda, beta);
    return p * shortfall + (1.0 - p);
}

double stockout_mean(int capacity, double lambda, double beta, double lead_time_h) {
    validate_rates(lambda, beta, lead_time_h);
    if (capacity < 0) throw std::domain_error("stockout_mean: capacity < 0");

    const double x = (beta + lambda) * lead_time_h;
    const double log_bl = std::log(beta + lambda);
    double log_s_n = 0.0;
    double log_x_pow = 0.0;
    std::vector<double> logs;
    logs.reserve(capacity + 1);
    for (int n = 0; n <= capacity; ++n) {
        if (n > 0) {
            log_x_pow += std::log(x) - std::log(static_cast<double>(n));
            log_s_n = log_add_exp(log_s_n, log_x_pow);
        }
        logs.push_back(std::log(static_cast<double>(capacity + 1 - n)) - lambda * lead_time_h +
                       std::log(beta) + (n - 1) * std::log(lambda) - (n + 1) * log_bl + log_s_n);
    }
    const double tail = std::exp(log_sum_exp(logs));
    const double bracket = lead_time_h + 1.0 / beta - (capacity + 1) / lambda + tail;
    const double mean = clamped_mixture_weight(lambda, beta) * bracket;
    // The bracket is a positive expectation; only rounding can push it below 0.
    return std::max(mean, 0.0);
}

StockoutModel::StockoutModel(int capacity, double lambda, double beta, double lead_time_h)
    : capacity_(capacity),
      lambda_(lambda),
      beta_(beta),
      lead_time_h_(lead_time_h),
      mean_(stockout_mean(capacity, lambda, beta, lead_time_h)),
      clamped_(beta > lambda) {
    if (clamped_) {
        std::cerr << "warning: launch rate exceeds demand rate (beta=" << beta
                  << " > lambda=" << lambda << "); stockout mixture weight clamped to 1\n";
    }
}

double StockoutModel::lst(double theta) const {
    return stockout_lst(theta, capacity_, lambda_, beta_, lead_time_h_);
}

LstDistribution StockoutModel::as_distribution() const {
    const int c = capacity_;
    const double lam = lambda_;
    const double b = beta_;
    const double l = lead_time_h_;
    return LstDistribution::custom(LstDistribution::Kind::Stockout, mean_,
                                   [c, lam, b, l](double theta) {
                                       return stockout_lst(theta, c, lam, b, l);
                                   });
}

}  // namespace oos
