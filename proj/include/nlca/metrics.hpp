#pragma once

#include <cstdint>

#include "nlca/volume.hpp"

namespace nlca {

/// SSIM window and stabilisation constants. The defaults are the usual
/// 8-bit choice: c1 = (0.01 * 255)^2, c2 = (0.03 * 255)^2, cubic window of
/// radius 3 (7^3 voxels).
struct SsimParams {
    int window_radius = 3;
    double c1 = 6.5025;
    double c2 = 58.5225;
};

struct MetricsReport {
    double rmse = 0.0;
    double ssim = 0.0;
    std::int64_t voxel_count = 0;
    SsimParams params_echo;
};

/// Root mean squared error over all voxels; symmetric, 0 iff equal.
double rmse(const Volume3D& reference, const Volume3D& estimate);

/// Mean of the local SSIM map. Local means, variances and the covariance
/// use uniform cubic moving windows with mirror boundary and the population
/// definition (division by the window voxel count).
double ssim(const Volume3D& reference, const Volume3D& estimate,
            const SsimParams& params = {}, int workers = 1);

MetricsReport report(const Volume3D& reference, const Volume3D& estimate,
                     const SsimParams& params = {}, int workers = 1);

} // namespace nlca
