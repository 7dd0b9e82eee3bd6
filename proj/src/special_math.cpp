#include "nlca/special_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace nlca {

namespace {

constexpr double kSeriesCutoff = 20.0;   // series below, asymptotic above
constexpr double kLogMaxDouble = 709.782712893384;
constexpr double kPi = 3.141592653589793238462643383279502884;

// Power series I_nu(x) = (x/2)^nu sum_k (x^2/4)^k / (k! (k+nu)!), nu in {0,1}.
// All terms are positive, so the sum is accurate to a few ulp wherever it is
// used (|x| <= kSeriesCutoff).
double series_i0(double ax)
{
    const double q = 0.25 * ax * ax;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * k);
        sum += term;
        if (term < sum * 1e-18)
            break;
    }
    return sum;
}

double series_i1(double ax)
{
    const double q = 0.25 * ax * ax;
    double term = 0.5 * ax;
    double sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= q / (static_cast<double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-18)
            break;
    }
    return sum;
}

// Asymptotic expansion of the scaled function for large arguments:
//   exp(-x) I_nu(x) ~ (2 pi x)^{-1/2} sum_k s_k / x^k,
//   s_0 = 1,  s_k = s_{k-1} ((2k-1)^2 - 4 nu^2) / (8k).
// Terms are summed until they stop improving; at x >= 20 the truncation
// error is far below 1e-12 relative.
double asymptotic_scaled(double ax, int nu)
{
    const double four_nu2 = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    double prev_mag = std::numeric_limits<double>::max();
    for (int k = 1; k <= 30; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (odd * odd - four_nu2) / (8.0 * k * ax);
        const double mag = std::fabs(term);
        if (mag >= prev_mag || mag < 1e-18)
            break;
        sum += term;
        prev_mag = mag;
    }
    return sum / std::sqrt(2.0 * kPi * ax);
}

void check_finite(double x, const char* name)
{
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(name) + " requires a finite argument");
}

double median_of_abs(std::vector<double>& v)
{
    const std::size_t n = v.size();
    const std::size_t mid = n / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    double m = v[mid];
    if (n % 2 == 0) {
        // mean of the two central order statistics
        const double lower = *std::max_element(v.begin(), v.begin() + mid);
        m = 0.5 * (lower + m);
    }
    return m;
}

template <typename T>
double mad_sigma_impl(std::span<const T> samples)
{
    if (samples.empty())
        throw std::invalid_argument("mad_sigma requires at least one sample");
    std::vector<double> mags(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        mags[i] = std::fabs(static_cast<double>(samples[i]));
    return median_of_abs(mags) / 0.6745;
}

} // namespace

double bessel_i0e(double x)
{
    check_finite(x, "bessel_i0e");
    const double ax = std::fabs(x);
    if (ax <= kSeriesCutoff)
        return std::exp(-ax) * series_i0(ax);
    return asymptotic_scaled(ax, 0);
}

double bessel_i1e(double x)
{
    check_finite(x, "bessel_i1e");
    const double ax = std::fabs(x);
    double v;
    if (ax <= kSeriesCutoff)
        v = std::exp(-ax) * series_i1(ax);
    else
        v = asymptotic_scaled(ax, 1);
    return x < 0.0 ? -v : v;
}

double bessel_i0(double x)
{
    check_finite(x, "bessel_i0");
    const double ax = std::fabs(x);
    if (ax <= kSeriesCutoff)
        return series_i0(ax);
    if (ax > kLogMaxDouble)
        throw std::range_error("bessel_i0 overflows for |x| > 709.78");
    return std::exp(ax) * asymptotic_scaled(ax, 0);
}

double bessel_i1(double x)
{
    check_finite(x, "bessel_i1");
    const double ax = std::fabs(x);
    double v;
    if (ax <= kSeriesCutoff) {
        v = series_i1(ax);
    } else {
        if (ax > kLogMaxDouble)
            throw std::range_error("bessel_i1 overflows for |x| > 709.78");
        v = std::exp(ax) * asymptotic_scaled(ax, 1);
    }
    return x < 0.0 ? -v : v;
}

double xi_correction(double theta)
{
    check_finite(theta, "xi_correction");
    if (theta < 0.0)
        throw std::invalid_argument("xi_correction requires theta >= 0");

    const double t2 = theta * theta;
    const double arg = 0.25 * t2;
    // exp(-t2/2) [ ... ]^2 == ( exp(-t2/4) [ ... ] )^2, which is exactly the
    // bracket evaluated with the scaled Bessel functions.
    const double bracket = (2.0 + t2) * bessel_i0e(arg) + t2 * bessel_i1e(arg);
    return 2.0 + t2 - (kPi / 8.0) * bracket * bracket;
}

double mad_sigma(std::span<const float> samples)
{
    return mad_sigma_impl(samples);
}

double mad_sigma(std::span<const double> samples)
{
    return mad_sigma_impl(samples);
}

} // namespace nlca
