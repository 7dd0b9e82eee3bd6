#include "nlca/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "nlca/box_filter.hpp"

namespace nlca {

double rmse(const Volume3D& reference, const Volume3D& estimate)
{
    if (reference.dims() != estimate.dims())
        throw std::invalid_argument("rmse requires equal dims");
    double sum = 0.0;
    for (std::size_t v = 0; v < reference.size(); ++v) {
        const double d = static_cast<double>(reference[v]) - estimate[v];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(reference.size()));
}

double ssim(const Volume3D& reference, const Volume3D& estimate,
            const SsimParams& params, int workers)
{
    if (reference.dims() != estimate.dims())
        throw std::invalid_argument("ssim requires equal dims");
    if (!(params.c1 > 0.0) || !(params.c2 > 0.0))
        throw std::invalid_argument("ssim constants must be > 0");
    if (params.window_radius < 0)
        throw std::invalid_argument("ssim window radius must be >= 0");

    const int r = params.window_radius;
    const Volume3D mu_x = box_mean(reference, r, workers);
    const Volume3D mu_y = box_mean(estimate, r, workers);
    const Volume3D xx = box_mean_product(reference, reference, r, workers);
    const Volume3D yy = box_mean_product(estimate, estimate, r, workers);
    const Volume3D xy = box_mean_product(reference, estimate, r, workers);

    // Raw second moments minus squared means; tiny negative variances from
    // float rounding are left as-is so identical inputs keep numerator and
    // denominator bitwise equal (ssim(a, a) == 1 exactly).
    double sum = 0.0;
    for (std::size_t v = 0; v < reference.size(); ++v) {
        const double mx = mu_x[v], my = mu_y[v];
        const double var_x = static_cast<double>(xx[v]) - mx * mx;
        const double var_y = static_cast<double>(yy[v]) - my * my;
        const double cov = static_cast<double>(xy[v]) - mx * my;
        const double num = (2.0 * mx * my + params.c1) * (2.0 * cov + params.c2);
        const double den =
            (mx * mx + my * my + params.c1) * (var_x + var_y + params.c2);
        sum += num / den;
    }
    return sum / static_cast<double>(reference.size());
}

MetricsReport report(const Volume3D& reference, const Volume3D& estimate,
                     const SsimParams& params, int workers)
{
    MetricsReport rep;
    rep.rmse = rmse(reference, estimate);
    rep.ssim = ssim(reference, estimate, params, workers);
    rep.voxel_count = static_cast<std::int64_t>(reference.size());
    rep.params_echo = params;
    return rep;
}

} // namespace nlca
