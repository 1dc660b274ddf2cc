#include "oos/distributions.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "oos/numeric.hpp"

namespace oos {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double log_poisson_pmf(int i, double lambda, double t) {
    if (i < 0) throw std::domain_error("poisson_pmf: i < 0");
    if (lambda <= 0.0) throw std::domain_error("poisson_pmf: lambda <= 0");
    if (t < 0.0) throw std::domain_error("poisson_pmf: t < 0");
    const double m = lambda * t;
    if (m == 0.0) {
        return i == 0 ? 0.0 : kNegInf;
    }
    return i * std::log(m) - m - std::lgamma(i + 1.0);
}

double poisson_pmf(int i, double lambda, double t) {
    return std::exp(log_poisson_pmf(i, lambda, t));
}

double erlang_pdf(double t, double lambda, int k) {
    if (k < 1) throw std::domain_error("erlang_pdf: k < 1");
    if (lambda <= 0.0) throw std::domain_error("erlang_pdf: lambda <= 0");
    if (t < 0.0) throw std::domain_error("erlang_pdf: t < 0");
    if (t == 0.0) {
        return k == 1 ? lambda : 0.0;
    }
    const double lg = k * std::log(lambda) + (k - 1) * std::log(t) - lambda * t - std::lgamma(static_cast<double>(k));
    return std::exp(lg);
}

double exponential_pdf(double t, double beta) {
    if (beta <= 0.0) throw std::domain_error("exponential_pdf: beta <= 0");
    if (t < 0.0) throw std::domain_error("exponential_pdf: t < 0");
    return beta * std::exp(-beta * t);
}

// ---------------------------------------------------------------------------
// DiscreteDuration
// ---------------------------------------------------------------------------

DiscreteDuration::DiscreteDuration(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("DiscreteDuration: no atoms");
    double total = 0.0;
    for (const auto& a : atoms_) {
        if (a.duration_h < 0.0) throw std::invalid_argument("DiscreteDuration: negative duration");
        if (a.probability < 0.0) throw std::invalid_argument("DiscreteDuration: negative probability");
        total += a.probability;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw std::invalid_argument("DiscreteDuration: probabilities sum to " + std::to_string(total));
    }
}

DiscreteDuration DiscreteDuration::uniform(std::vector<double> durations_h) {
    if (durations_h.empty()) throw std::invalid_argument("DiscreteDuration::uniform: empty");
    const double p = 1.0 / static_cast<double>(durations_h.size());
    std::vector<Atom> atoms;
    atoms.reserve(durations_h.size());
    for (double d : durations_h) atoms.push_back({d, p});
    // The uniform weight 1/n is not exactly representable for most n; rescale
    // so the stored probabilities sum to 1 bit-exactly.
    double total = p * static_cast<double>(durations_h.size());
    for (auto& a : atoms) a.probability /= total;
    return DiscreteDuration(std::move(atoms));
}

double DiscreteDuration::mean() const {
    double m = 0.0;
    for (const auto& a : atoms_) m += a.probability * a.duration_h;
    return m;
}

double DiscreteDuration::lst(double theta) const {
    double v = 0.0;
    for (const auto& a : atoms_) v += a.probability * std::exp(-theta * a.duration_h);
    return v;
}

// ---------------------------------------------------------------------------
// LstDistribution
// ---------------------------------------------------------------------------

struct LstDistribution::Impl {
    Kind kind;
    double mean;
    std::function<double(double)> lst;
};

LstDistribution::LstDistribution(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

LstDistribution LstDistribution::point_mass(double duration_h) {
    if (duration_h < 0.0) throw std::invalid_argument("point_mass: negative duration");
    return LstDistribution(std::make_shared<Impl>(Impl{
        Kind::PointMass, duration_h,
        [duration_h](double theta) { return std::exp(-theta * duration_h); }}));
}

LstDistribution LstDistribution::exponential(double rate_per_h) {
    if (rate_per_h <= 0.0) throw std::invalid_argument("exponential: rate <= 0");
    return LstDistribution(std::make_shared<Impl>(Impl{
        Kind::Exponential, 1.0 / rate_per_h,
        [rate_per_h](double theta) { return rate_per_h / (rate_per_h + theta); }}));
}

LstDistribution LstDistribution::discrete(DiscreteDuration d) {
    const double mean = d.mean();
    return LstDistribution(std::make_shared<Impl>(Impl{
        Kind::DiscreteFinite, mean,
        [d = std::move(d)](double theta) { return d.lst(theta); }}));
}

LstDistribution LstDistribution::erlang(double rate_per_h, int k) {
    if (rate_per_h <= 0.0) throw std::invalid_argument("erlang: rate <= 0");
    if (k < 1) throw std::invalid_argument("erlang: k < 1");
    return LstDistribution(std::make_shared<Impl>(Impl{
        Kind::Erlang, static_cast<double>(k) / rate_per_h,
        [rate_per_h, k](double theta) {
            return std::pow(rate_per_h / (rate_per_h + theta), static_cast<double>(k));
        }}));
}

LstDistribution LstDistribution::sum_of(std::vector<LstDistribution> parts) {
    if (parts.empty()) throw std::invalid_argument("sum_of: no parts");
    double mean = 0.0;
    for (const auto& p : parts) mean += p.mean();
    return LstDistribution(std::make_shared<Impl>(Impl{
        Kind::CompositeSum, mean,
        [parts = std::move(parts)](double theta) {
            double v = 1.0;
            for (const auto& p : parts) v *= p.lst(theta);
            return v;
        }}));
}

LstDistribution LstDistribution::custom(Kind kind, double mean_h,
                                        std::function<double(double)> lst_fn) {
    if (mean_h < 0.0) throw std::invalid_argument("custom: negative mean");
    return LstDistribution(std::make_shared<Impl>(Impl{kind, mean_h, std::move(lst_fn)}));
}

double LstDistribution::mean() const { return impl_->mean; }
double LstDistribution::lst(double theta) const { return impl_->lst(theta); }
LstDistribution::Kind LstDistribution::kind() const { return impl_->kind; }

double lst_product(std::span<const LstDistribution> factors, double theta) {
    if (factors.empty()) throw std::invalid_argument("lst_product: no factors");
    double v = 1.0;
    for (const auto& f : factors) v *= f.lst(theta);
    return v;
}

}  // namespace oos
