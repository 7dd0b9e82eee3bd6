#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "nlca/special_math.hpp"
#include "oracles.hpp"

using namespace nlca;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("bessel_i0 known values")
{
    CHECK(bessel_i0(0.0) == 1.0);
    CHECK(bessel_i0(1.0) == doctest::Approx(1.26606588).epsilon(1e-8));
    CHECK(bessel_i0(5.0) == doctest::Approx(27.2398718).epsilon(1e-8));
    CHECK(bessel_i0(-5.0) == bessel_i0(5.0));
}

TEST_CASE("bessel_i1 known values and odd symmetry")
{
    CHECK(bessel_i1(0.0) == 0.0);
    CHECK(bessel_i1(1.0) == doctest::Approx(0.56515910).epsilon(1e-8));
    CHECK(bessel_i1(-2.0) == -bessel_i1(2.0));
}

TEST_CASE("bessel implementations track the series oracle to 1e-8")
{
    // The grid crosses the series/asymptotic switch at |x| = 20.
    for (double x = 0.0; x <= 30.0; x += 0.25) {
        CHECK(bessel_i0(x) ==
              doctest::Approx(oracle::bessel_i0_series(x)).epsilon(1e-8));
        CHECK(bessel_i1(x) ==
              doctest::Approx(oracle::bessel_i1_series(x)).epsilon(1e-8));
    }
    for (double x : {50.0, 100.0, 300.0, 700.0}) {
        CHECK(bessel_i0(x) ==
              doctest::Approx(oracle::bessel_i0_series(x)).epsilon(1e-8));
        CHECK(bessel_i1(x) ==
              doctest::Approx(oracle::bessel_i1_series(x)).epsilon(1e-8));
    }
}

TEST_CASE("bessel_i0 is >= 1 everywhere sampled")
{
    for (double x = -30.0; x <= 30.0; x += 0.7)
        CHECK(bessel_i0(x) >= 1.0);
}

TEST_CASE("bessel overflow range is rejected")
{
    CHECK_THROWS_AS(static_cast<void>(bessel_i0(720.0)), std::range_error);
    CHECK_THROWS_AS(static_cast<void>(bessel_i1(-720.0)), std::range_error);
    CHECK_THROWS(static_cast<void>(bessel_i0(std::numeric_limits<double>::infinity())));
}

TEST_CASE("scaled bessels stay finite and consistent")
{
    for (double x : {0.5, 5.0, 19.9, 20.1, 100.0, 5000.0}) {
        const double i0e = bessel_i0e(x);
        CHECK(std::isfinite(i0e));
        CHECK(i0e > 0.0);
        if (x <= 700.0)
            CHECK(i0e == doctest::Approx(bessel_i0(x) * std::exp(-x)).epsilon(1e-10));
    }
}

TEST_CASE("xi_correction closed-form anchor points")
{
    CHECK(xi_correction(0.0) == doctest::Approx(2.0 - kPi / 2.0).epsilon(1e-9));
    CHECK(xi_correction(100.0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(xi_correction(50.0) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(static_cast<void>(xi_correction(-0.5)), std::invalid_argument);
}

TEST_CASE("xi_correction is nondecreasing on [0, 10] and bounded by (0, 2]")
{
    double prev = 0.0;
    for (int n = 0; n <= 100; ++n) {
        const double theta = 0.1 * n;
        const double xi = xi_correction(theta);
        CHECK(xi > 0.0);
        CHECK(xi <= 2.0);
        CHECK(xi >= prev);
        prev = xi;
    }
}

TEST_CASE("mad_sigma hand example and degenerate input")
{
    const std::vector<double> samples{-1.0, 0.0, 1.0, 2.0, -2.0};
    CHECK(mad_sigma(std::span<const double>(samples)) ==
          doctest::Approx(1.0 / 0.6745).epsilon(1e-12));

    const std::vector<double> zeros(9, 0.0);
    CHECK(mad_sigma(std::span<const double>(zeros)) == 0.0);

    const std::vector<double> empty;
    CHECK_THROWS_AS(static_cast<void>(mad_sigma(std::span<const double>(empty))),
                    std::invalid_argument);
}

TEST_CASE("mad_sigma even count uses the central pair")
{
    const std::vector<double> samples{1.0, 2.0, 3.0, 10.0};
    CHECK(mad_sigma(std::span<const double>(samples)) ==
          doctest::Approx(2.5 / 0.6745).epsilon(1e-12));
}

TEST_CASE("mad_sigma is consistent for Gaussian samples")
{
    std::mt19937_64 gen(424242);
    std::normal_distribution<double> dist(0.0, 2.0);
    std::vector<float> samples(1000000);
    for (auto& s : samples)
        s = static_cast<float>(dist(gen));
    const double est = mad_sigma(std::span<const float>(samples));
    CHECK(est == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("mad_sigma sign-flip invariance and linear scaling")
{
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> x(101);
        for (auto& v : x)
            v = dist(gen);
        const double base = mad_sigma(std::span<const double>(x));

        std::vector<double> flipped(x.size()), scaled(x.size());
        const double c = dist(gen);
        for (std::size_t i = 0; i < x.size(); ++i) {
            flipped[i] = -x[i];
            scaled[i] = c * x[i];
        }
        CHECK(mad_sigma(std::span<const double>(flipped)) == base);
        CHECK(mad_sigma(std::span<const double>(scaled)) ==
              doctest::Approx(std::fabs(c) * base).epsilon(1e-12));
    }
}
