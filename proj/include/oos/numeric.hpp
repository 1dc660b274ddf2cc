#pragma once

#include <span>
#include <vector>

// Log-domain arithmetic helpers shared by the probability and inventory
// code. Several of the closed forms evaluated in this project multiply
// factors spanning hundreds of orders of magnitude; every sum of such
// products is therefore assembled from per-factor logarithms.

namespace oos {

/// log(sum_i exp(v[i])), tolerant of -inf entries. Empty input -> -inf.
double log_sum_exp(std::span<const double> log_values);

/// log(exp(a) + exp(b))
double log_add_exp(double a, double b);

/// log(1 + exp(x)), the softplus function, without overflow.
double log1p_exp(double x);

/// One addend of a sum-of-products expression: sign * exp(sum(log_factors)).
/// sign must be +1, -1, or 0 (0 marks a term known to vanish).
struct SignedLogTerm {
    double sign = 1.0;
    std::vector<double> log_factors;

    double log_magnitude() const;
};

/// Evaluates sum_j sign_j * prod_k factor_jk with each factor supplied as a
/// log-magnitude, scaling by the largest term so intermediate exponentials
/// stay representable. Returns the sum as an ordinary double.
///
/// Throws std::domain_error if opposite-signed terms cancel below the
/// precision representable relative to the largest term, since the result
/// would then carry no correct digits.
double log_domain_sum_of_products(std::span<const SignedLogTerm> terms);

/// Signed log-sum-exp over (sign, log-magnitude) pairs. Returns the signed
/// result in linear scale; same cancellation check as above.
double signed_log_sum(std::span<const double> signs, std::span<const double> log_magnitudes);

/// log of the regularized lower incomplete gamma P(a, x) = gamma(a,x)/Gamma(a),
/// accurate deep into the left tail where P underflows a double.
double log_gamma_lower_reg(double a, double x);

/// log of the regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double log_gamma_upper_reg(double a, double x);

/// P(a, x) in linear scale (clamped exp of the log form).
double gamma_lower_reg(double a, double x);

/// Q(a, x) in linear scale.
double gamma_upper_reg(double a, double x);

/// log(sum_{j=0}^{n} x^j / j!), the truncated exponential series.
double log_exp_series_partial_sum(int n, double x);

}  // namespace oos
