#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

// Probability primitives shared by the queueing and inventory submodels.
// Durations are in hours, rates in 1/hours throughout.

namespace oos {

/// Poisson pmf lambda^i t^i e^{-lambda t} / i!, the demand count over an
/// interval of length t. Evaluated through log-gamma so large i is exact
/// to double precision instead of overflowing.
double poisson_pmf(int i, double lambda, double t);

/// log of poisson_pmf; -inf where the pmf vanishes.
double log_poisson_pmf(int i, double lambda, double t);

/// Erlang(k, lambda) density lambda^k t^{k-1} e^{-lambda t} / (k-1)!.
double erlang_pdf(double t, double lambda, int k);

/// Exponential density beta e^{-beta t}.
double exponential_pdf(double t, double beta);

/// Finite mixture of fixed durations.
class DiscreteDuration {
public:
    struct Atom {
        double duration_h;
        double probability;
    };

    explicit DiscreteDuration(std::vector<Atom> atoms);

    /// Equal-weight mixture over the given durations.
    static DiscreteDuration uniform(std::vector<double> durations_h);

    double mean() const;
    double lst(double theta) const;
    const std::vector<Atom>& atoms() const { return atoms_; }

private:
    std::vector<Atom> atoms_;
};

/// A nonnegative random duration exposed through its mean and
/// Laplace-Stieltjes transform E[e^{-theta X}]. This is the only interface
/// the queueing solution needs, so every service-time component (travel,
/// repair, stockout delay) is passed around as one of these.
class LstDistribution {
public:
    enum class Kind {
        PointMass,
        Exponential,
        DiscreteFinite,
        Erlang,
        CompositeSum,
        Stockout,
    };

    static LstDistribution point_mass(double duration_h);
    static LstDistribution exponential(double rate_per_h);
    static LstDistribution discrete(DiscreteDuration d);
    static LstDistribution erlang(double rate_per_h, int k);

    /// Sum of independent components; the LST is the product of the
    /// component LSTs and the mean is the sum of the component means.
    static LstDistribution sum_of(std::vector<LstDistribution> parts);

    /// Escape hatch for model-defined kinds (used by the stockout model).
    /// `lst_fn` must satisfy lst_fn(0) == 1.
    static LstDistribution custom(Kind kind, double mean_h,
                                  std::function<double(double)> lst_fn);

    double mean() const;
    double lst(double theta) const;
    Kind kind() const;

private:
    struct Impl;
    explicit LstDistribution(std::shared_ptr<const Impl> impl);
    std::shared_ptr<const Impl> impl_;
};

/// Product of the factors' LSTs at theta: the LST of the independent sum.
double lst_product(std::span<const LstDistribution> factors, double theta);

}  // namespace oos
