#include "oos/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace oos {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log1p_exp(double x) {
    if (x > 0.0) {
        return x + std::log1p(std::exp(-x));
    }
    return std::log1p(std::exp(x));
}

double log_add_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

double log_sum_exp(std::span<const double> log_values) {
    if (log_values.empty()) return kNegInf;
    const double m = *std::max_element(log_values.begin(), log_values.end());
    if (m == kNegInf) return kNegInf;
    double s = 0.0;
    for (double v : log_values) {
        s += std::exp(v - m);
    }
    return m + std::log(s);
}

double SignedLogTerm::log_magnitude() const {
    double s = 0.0;
    for (double f : log_factors) s += f;
    return s;
}

double signed_log_sum(std::span<const double> signs, std::span<const double> log_magnitudes) {
    if (signs.size() != log_magnitudes.size()) {
        throw std::invalid_argument("signed_log_sum: size mismatch");
    }
    double m = kNegInf;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 0.0) m = std::max(m, log_magnitudes[i]);
    }
    if (m == kNegInf) return 0.0;
    double acc = 0.0;
    double abs_acc = 0.0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 0.0) continue;
        const double t = std::exp(log_magnitudes[i] - m);
        acc += signs[i] * t;
        abs_acc += t;
    }
    // Opposite signs may cancel; once the remainder drops to rounding noise of
    // the scaled accumulation the digits are meaningless.
    const double eps = std::numeric_limits<double>::epsilon();
    if (std::abs(acc) < 8.0 * eps * static_cast<double>(signs.size()) && abs_acc > 0.0) {
        const bool mixed = std::any_of(signs.begin(), signs.end(), [](double s) { return s < 0.0; }) &&
                           std::any_of(signs.begin(), signs.end(), [](double s) { return s > 0.0; });
        if (mixed) {
            throw std::domain_error("signed_log_sum: total cancellation below representable precision");
        }
    }
    return acc * std::exp(m);
}

double log_domain_sum_of_products(std::span<const SignedLogTerm> terms) {
    std::vector<double> signs;
    std::vector<double> mags;
    signs.reserve(terms.size());
    mags.reserve(terms.size());
    for (const auto& t : terms) {
        signs.push_back(t.sign);
        mags.push_back(t.log_magnitude());
    }
    return signed_log_sum(signs, mags);
}

double log_exp_series_partial_sum(int n, double x) {
    if (n < 0) return kNegInf;
    if (x < 0.0) throw std::domain_error("log_exp_series_partial_sum: x < 0");
    if (x == 0.0) return 0.0;  // only the j=0 term survives
    // Accumulate log(x^j/j!) incrementally and fold into a running logsumexp.
    const double logx = std::log(x);
    double log_term = 0.0;
    double acc = 0.0;
    for (int j = 1; j <= n; ++j) {
        log_term += logx - std::log(static_cast<double>(j));
        acc = log_add_exp(acc, log_term);
    }
    return acc;
}

namespace {

// Series for P(a,x), all terms positive: P = x^a e^-x / Gamma(a+1) * S,
// S = sum_k x^k / ((a+1)(a+2)...(a+k)). Converges fastest for x < a + 1.
double log_lower_series(double a, double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return a * std::log(x) - x - std::lgamma(a + 1.0) + std::log(sum);
}

// Lentz continued fraction for Q(a,x), valid for x > a + 1 or so.
double log_upper_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return a * std::log(x) - x - std::lgamma(a) + std::log(h);
}

}  // namespace

double log_gamma_lower_reg(double a, double x) {
    if (a <= 0.0) throw std::domain_error("log_gamma_lower_reg: a <= 0");
    if (x < 0.0) throw std::domain_error("log_gamma_lower_reg: x < 0");
    if (x == 0.0) return kNegInf;
    if (x < a + 1.0) {
        return log_lower_series(a, x);
    }
    // Right of the mean: P is O(1); compute via the complement.
    const double log_q = log_upper_cf(a, x);
    if (log_q > -1e-17) {
        // Q is 1 to double precision; fall back to the series even though it
        // converges slowly, as P itself is the tiny quantity here. This branch
        // is practically unreachable for x >= a + 1.
        return log_lower_series(a, x);
    }
    return std::log1p(-std::exp(log_q));
}

double log_gamma_upper_reg(double a, double x) {
    if (a <= 0.0) throw std::domain_error("log_gamma_upper_reg: a <= 0");
    if (x < 0.0) throw std::domain_error("log_gamma_upper_reg: x < 0");
    if (x == 0.0) return 0.0;
    if (x >= a + 1.0) {
        return log_upper_cf(a, x);
    }
    const double log_p = log_lower_series(a, x);
    if (log_p > -1e-17) {
        return log_upper_cf(a, x);
    }
    return std::log1p(-std::exp(log_p));
}

double gamma_lower_reg(double a, double x) {
    const double lp = log_gamma_lower_reg(a, x);
    return lp >= 0.0 ? 1.0 : std::exp(lp);
}

double gamma_upper_reg(double a, double x) {
    const double lq = log_gamma_upper_reg(a, x);
    return lq >= 0.0 ? 1.0 : std::exp(lq);
}

}  // namespace oos
