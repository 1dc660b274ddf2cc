#pragma once

#include "oos/distributions.hpp"

// Order-up-to depot model. The depot holds up to C spares; at exponentially
// distributed review epochs (rate beta, the launch rate) an order restores
// the inventory position to C and arrives after a constant lead time L.
// Demand is approximated as Poisson with the queue's mean rate lambda.

namespace oos {

struct InventoryInputs {
    double lambda = 0.0;  // demand rate, per hour
    double beta = 0.0;    // launch (review) rate, per hour
    double lead_time_h = 0.0;
    int capacity = 0;

    void validate() const;
};

/// Closed-form fill rate for capacity C: one minus the ratio of expected
/// backorders per launch interval plus lead time to expected demand per
/// launch interval. Not clamped: small C can legitimately produce values
/// below zero (backorders then exceed per-interval demand).
double fill_rate(int capacity, double lambda, double beta, double lead_time_h);

/// Smallest integer C >= 0 with fill_rate(C, ...) >= phi_req. The fill rate
/// is monotone in C, so a linear scan terminates.
int min_capacity(double phi_req, double lambda, double beta, double lead_time_h);

/// LST of the stockout delay: with probability beta/lambda the delay is
/// max(T_l + L - T_s, 0) where T_l ~ Exp(beta) and T_s ~ Erlang(C+1, lambda),
/// otherwise zero. Evaluated by splitting the defining double integral at
/// T_s = L, which yields three nonnegative incomplete-gamma pieces and stays
/// finite for every theta >= 0 including theta == lambda.
double stockout_lst(double theta, int capacity, double lambda, double beta, double lead_time_h);

/// The same transform assembled term by term in the algebraic layout of the
/// derivation, with the (lambda/(lambda-theta))^(C+1) prefactor and double
/// sums pushed through log_domain_sum_of_products. Exact but ill-conditioned
/// when (C+1)*log(lambda/|lambda-theta|) approaches the double mantissa;
/// kept as an independent cross-check for the partitioned form. theta at the
/// lambda singularity is handled by a symmetric perturbation average.
double stockout_lst_reference(double theta, int capacity, double lambda, double beta,
                              double lead_time_h);

/// E[S_stockout] in closed form (the derivative route), inner sums in
/// log-domain.
double stockout_mean(int capacity, double lambda, double beta, double lead_time_h);

/// Stockout delay packaged for the queueing submodel. When lambda < beta the
/// mixture weight beta/lambda is clamped to 1 and demand_clamped() reports it.
class StockoutModel {
public:
    StockoutModel(int capacity, double lambda, double beta, double lead_time_h);

    double mean() const { return mean_; }
    double lst(double theta) const;
    bool demand_clamped() const { return clamped_; }
    int capacity() const { return capacity_; }

    LstDistribution as_distribution() const;

private:
    int capacity_;
    double lambda_;
    double beta_;
    double lead_time_h_;
    double mean_;
    bool clamped_;
};

}  // namespace oos
