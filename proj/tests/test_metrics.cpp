#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nlca/metrics.hpp"
#include "testutil.hpp"

using namespace nlca;

TEST_CASE("rmse identities")
{
    const auto v = testutil::random_volume(6, 6, 6, 8, 0.0f, 100.0f);
    CHECK(rmse(v, v) == 0.0);

    Volume3D a(2, 1, 1, {0.0f, 0.0f});
    Volume3D b(2, 1, 1, {3.0f, 4.0f});
    CHECK(rmse(a, b) == doctest::Approx(std::sqrt(12.5)).epsilon(1e-9));
    CHECK(rmse(a, b) == doctest::Approx(3.53553).epsilon(1e-4));
    CHECK(rmse(a, b) == rmse(b, a));

    CHECK_THROWS(static_cast<void>(rmse(a, Volume3D(3, 1, 1))));
}

TEST_CASE("rmse is zero only for equal volumes and scales linearly")
{
    auto a = testutil::random_volume(5, 5, 5, 3, 0.0f, 10.0f);
    auto b = a;
    b(2, 2, 2) += 0.5f;
    CHECK(rmse(a, b) > 0.0);

    const auto x = testutil::random_volume(5, 5, 5, 4, 0.0f, 10.0f);
    const auto y = testutil::random_volume(5, 5, 5, 5, 0.0f, 10.0f);
    Volume3D xs(5, 5, 5), ys(5, 5, 5);
    for (std::size_t i = 0; i < x.size(); ++i) {
        xs[i] = 4.0f * x[i];
        ys[i] = 4.0f * y[i];
    }
    CHECK(rmse(xs, ys) == doctest::Approx(4.0 * rmse(x, y)).epsilon(1e-9));
}

TEST_CASE("ssim of identical volumes is exactly 1")
{
    const auto v = testutil::random_volume(9, 8, 7, 6, 0.0f, 255.0f);
    CHECK(ssim(v, v) == 1.0);

    const Volume3D zeros(6, 6, 6, 0.0f);
    CHECK(ssim(zeros, zeros) == 1.0);
}

TEST_CASE("ssim constant-volume hand value")
{
    const Volume3D a(8, 8, 8, 10.0f);
    const Volume3D b(8, 8, 8, 20.0f);
    const double got = ssim(a, b);
    // Zero variances: the structure term is c2/c2 = 1 and the luminance term
    // is (2*10*20 + 6.5025) / (10^2 + 20^2 + 6.5025).
    CHECK(got == doctest::Approx(406.5025 / 506.5025).epsilon(1e-9));
    CHECK(got == doctest::Approx(0.80259).epsilon(1e-4));
}

TEST_CASE("ssim is symmetric")
{
    const auto a = testutil::random_volume(10, 9, 8, 41, 0.0f, 255.0f);
    const auto b = testutil::random_volume(10, 9, 8, 42, 0.0f, 255.0f);
    CHECK(ssim(a, b) == ssim(b, a));
}

TEST_CASE("ssim penalizes a constant offset progressively")
{
    const auto a = testutil::random_volume(12, 12, 12, 50, 50.0f, 200.0f);
    double prev = 1.0;
    for (const float offset : {10.0f, 30.0f, 60.0f, 120.0f}) {
        Volume3D shifted(12, 12, 12);
        for (std::size_t i = 0; i < a.size(); ++i)
            shifted[i] = a[i] + offset;
        const double s = ssim(a, shifted);
        CHECK(s < prev);
        prev = s;
    }
    CHECK(prev < 1.0);
}

TEST_CASE("ssim validates arguments")
{
    const Volume3D a(4, 4, 4, 1.0f);
    CHECK_THROWS(static_cast<void>(ssim(a, Volume3D(5, 4, 4))));
    SsimParams bad;
    bad.c1 = 0.0;
    CHECK_THROWS(static_cast<void>(ssim(a, a, bad)));
}

TEST_CASE("report bundles metrics with the parameters used")
{
    const auto v = testutil::random_volume(6, 5, 4, 77, 0.0f, 100.0f);
    SsimParams params;
    params.window_radius = 2;
    const auto rep = report(v, v, params);
    CHECK(rep.rmse == 0.0);
    CHECK(rep.ssim == 1.0);
    CHECK(rep.voxel_count == 6 * 5 * 4);
    CHECK(rep.params_echo.window_radius == 2);
    CHECK(rep.params_echo.c1 == params.c1);
    CHECK(rep.params_echo.c2 == params.c2);
}

TEST_CASE("ssim of independent noise is far from 1")
{
    const auto a = testutil::random_volume(10, 10, 10, 1, 0.0f, 255.0f);
    const auto b = testutil::random_volume(10, 10, 10, 2, 0.0f, 255.0f);
    CHECK(ssim(a, b) < 0.5);
    CHECK(ssim(a, b) <= 1.0);
}
