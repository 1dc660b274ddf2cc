#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oos/distributions.hpp"
#include "oracles.hpp"

using namespace oos;

TEST_CASE("poisson_pmf boundary and analytic cases") {
    CHECK(poisson_pmf(0, 0.0025, 0.0) == doctest::Approx(1.0));
    CHECK(poisson_pmf(3, 0.0025, 0.0) == doctest::Approx(0.0));
    CHECK(poisson_pmf(0, 1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(poisson_pmf(-1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(poisson_pmf(0, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(poisson_pmf(0, 1.0, -1.0), std::domain_error);
}

#ifdef OOS_HAVE_MPFR
TEST_CASE("poisson_pmf matches multiprecision evaluation for large counts") {
    CHECK(poisson_pmf(150, 0.0025, 60000.0) ==
          doctest::Approx(test::poisson_pmf_mpfr(150, 0.0025, 60000.0)).epsilon(1e-13));
    CHECK(poisson_pmf(700, 0.01, 60000.0) ==
          doctest::Approx(test::poisson_pmf_mpfr(700, 0.01, 60000.0)).epsilon(1e-12));
}
#endif

TEST_CASE("poisson_pmf sums to one over its support") {
    for (double mean : {0.5, 5.0, 20.0, 50.0}) {
        const double lambda = 0.01;
        const double t = mean / lambda;
        double acc = 0.0;
        int i = 0;
        while (true) {
            const double p = poisson_pmf(i, lambda, t);
            acc += p;
            if (i > mean && p < 1e-13) break;
            ++i;
        }
        CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("erlang_pdf reduces to the exponential at k = 1") {
    for (double t : {0.0, 0.3, 10.0}) {
        CHECK(erlang_pdf(t, 0.2, 1) == doctest::Approx(exponential_pdf(t, 0.2)).epsilon(1e-14));
    }
}

TEST_CASE("erlang and poisson tie together on a parameter grid") {
    // f_Ts(t; lambda, C+1) = f_D(C; lambda, t) * lambda
    for (double t : {0.1, 100.0, 5000.0}) {
        for (double lambda : {0.0025, 0.01, 0.3}) {
            for (int c : {0, 3, 17, 60}) {
                const double lhs = erlang_pdf(t, lambda, c + 1);
                const double rhs = poisson_pmf(c, lambda, t) * lambda;
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("erlang_pdf integrates to one") {
    const auto f = [](double t) { return erlang_pdf(t, 0.01, 5); };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, std::numeric_limits<double>::infinity(), 10, 1e-12);
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("exponential density and its distribution") {
    const double beta = 1.0 / 1213.4;
    CHECK(exponential_pdf(0.0, beta) == doctest::Approx(beta));
    CHECK(LstDistribution::exponential(beta).mean() == doctest::Approx(1213.4));
    // CDF at the mean: 1 - e^{-1}
    const auto f = [&](double t) { return exponential_pdf(t, beta); };
    const double cdf = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        f, 0.0, 1213.4, 10, 1e-12);
    CHECK(cdf == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
}

TEST_CASE("lst closed forms") {
    CHECK(LstDistribution::point_mass(4.0).lst(0.0) == doctest::Approx(1.0));
    const double beta = 0.7;
    CHECK(LstDistribution::exponential(beta).lst(beta) == doctest::Approx(0.5).epsilon(1e-14));
    const DiscreteDuration d({{10.0, 0.5}, {20.0, 0.5}});
    CHECK(d.lst(0.1) ==
          doctest::Approx(0.5 * std::exp(-1.0) + 0.5 * std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("discrete duration validation") {
    CHECK_THROWS(DiscreteDuration({{1.0, 0.6}, {2.0, 0.6}}));
    CHECK_THROWS(DiscreteDuration({{-1.0, 1.0}}));
    const auto u = DiscreteDuration::uniform({1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0});
    double total = 0.0;
    for (const auto& a : u.atoms()) total += a.probability;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(u.mean() == doctest::Approx(4.0));
}

TEST_CASE("lst_product equals the factor for a single element and one at zero") {
    std::vector<LstDistribution> single{LstDistribution::point_mass(3.5)};
    for (double theta : {0.0, 0.2, 2.0}) {
        CHECK(lst_product(single, theta) == doctest::Approx(single[0].lst(theta)));
    }
    std::vector<LstDistribution> mixed{
        LstDistribution::point_mass(3.0), LstDistribution::exponential(0.5),
        LstDistribution::discrete(DiscreteDuration::uniform({1.0, 9.0}))};
    CHECK(lst_product(mixed, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("convolution of point masses is the point mass of the sum") {
    const auto sum = LstDistribution::sum_of(
        {LstDistribution::point_mass(3.0), LstDistribution::point_mass(4.0)});
    const auto direct = LstDistribution::point_mass(7.0);
    for (double theta : {0.0, 0.01, 0.5, 3.0}) {
        CHECK(sum.lst(theta) == doctest::Approx(direct.lst(theta)).epsilon(1e-14));
    }
    CHECK(sum.mean() == doctest::Approx(7.0));
}

namespace {

std::vector<LstDistribution> sample_distributions() {
    std::vector<LstDistribution> all;
    all.push_back(LstDistribution::point_mass(4.0));
    all.push_back(LstDistribution::point_mass(0.0));
    all.push_back(LstDistribution::exponential(0.04));
    all.push_back(LstDistribution::erlang(0.2, 7));
    all.push_back(LstDistribution::discrete(DiscreteDuration::uniform({0.0, 14.4, 26.3, 35.9})));
    all.push_back(LstDistribution::sum_of(
        {LstDistribution::point_mass(4.0), LstDistribution::exponential(0.1),
         LstDistribution::discrete(DiscreteDuration::uniform({2.0, 8.0}))}));
    return all;
}

}  // namespace

TEST_CASE("every kind satisfies lst(0) = 1 and is nonincreasing on a theta grid") {
    for (const auto& dist : sample_distributions()) {
        CHECK(std::abs(dist.lst(0.0) - 1.0) < 1e-12);
        double prev = 1.0 + 1e-15;
        for (int k = 0; k <= 100; ++k) {
            const double theta = 0.01 * k;
            const double v = dist.lst(theta);
            CHECK(v > 0.0);
            CHECK(v <= prev + 1e-14);
            prev = v;
        }
    }
}

TEST_CASE("mean equals the negative lst slope at zero") {
    for (const auto& dist : sample_distributions()) {
        if (dist.mean() == 0.0) continue;
        const double h = 1e-7 / std::max(dist.mean(), 1.0);
        const double slope = -(dist.lst(h) - dist.lst(-h)) / (2.0 * h);
        CHECK(slope == doctest::Approx(dist.mean()).epsilon(1e-6));
    }
}

TEST_CASE("composite mean is the sum of component means") {
    const auto a = LstDistribution::exponential(0.05);
    const auto b = LstDistribution::point_mass(4.0);
    const auto c = LstDistribution::discrete(DiscreteDuration::uniform({3.0, 5.0, 13.0}));
    const auto sum = LstDistribution::sum_of({a, b, c});
    CHECK(sum.mean() == doctest::Approx(a.mean() + b.mean() + c.mean()).epsilon(1e-14));
    const double h = 1e-9;
    const double slope = -(sum.lst(h) - sum.lst(-h)) / (2.0 * h);
    CHECK(slope == doctest::Approx(sum.mean()).epsilon(1e-6));
}
