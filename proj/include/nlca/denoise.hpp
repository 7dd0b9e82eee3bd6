#pragma once

#include "nlca/volume.hpp"

namespace nlca {

/// Filter parameters. The defaults are the tuned operating point: 3^3
/// patches, an 11^3 search volume, C1 = 0.9 and C2 = 0.5.
struct DenoiseParams {
    double sigma_n = 0.0;  ///< Gaussian-component noise std (intensity units)
    int patch_radius = 1;
    int search_radius = 5;
    double c1 = 0.9;       ///< mean-ratio acceptance constant, in (0, 1]
    double c2 = 0.5;       ///< second-moment-ratio acceptance constant, in (0, 1]

    void validate() const;
};

/// First and second moments of the cubic patch centered at every voxel
/// (mirror boundary), precomputed once per filter run.
struct MomentTables {
    Volume3D mean_field;    ///< <M> over the (2r+1)^3 window
    Volume3D sqmean_field;  ///< <M^2> over the same window
    int patch_radius = 0;
};

struct PatchMoments {
    double mean = 0.0;
    double sqmean = 0.0;
};

MomentTables build_moment_tables(const Volume3D& volume, int patch_radius,
                                 int workers = 1);

/// Moment-ratio similarity test with inclusive bounds:
///   c1 <= <M_n>/<M_c> <= 1/c1  and  c2 <= <M_n^2>/<M_c^2> <= 1/c2.
/// A zero center moment matches only a zero candidate moment (the limit of
/// the ratio criterion as the center moment goes to 0).
inline bool similarity_accept(const PatchMoments& center, const PatchMoments& candidate,
                              double c1, double c2)
{
    const auto ratio_ok = [](double num, double den, double c) {
        if (den == 0.0)
            return num == 0.0;
        const double r = num / den;
        return c <= r && r <= 1.0 / c;
    };
    return ratio_ok(candidate.mean, center.mean, c1) &&
           ratio_ok(candidate.sqmean, center.sqmean, c2);
}

/// Local second-moment estimator: per voxel,
///   A_hat = sqrt(max(<M^2> - 2 sigma_n^2, 0))
/// with <M^2> taken over the (2 patch_radius + 1)^3 neighborhood.
Volume3D ca_filter(const Volume3D& volume, const DenoiseParams& params, int workers = 1);

/// Non-local extension: for each voxel the (2 search_radius + 1)^3 window is
/// enumerated in ascending z, y, x offset order (mirror boundary); candidates
/// passing similarity_accept against the center's patch moments contribute
/// their patch second moment to an unweighted running double sum, and the
/// accepted mean replaces the local <M^2> in the estimator above. The center
/// always accepts itself, so the selection is never empty.
Volume3D nlca_filter(const Volume3D& volume, const DenoiseParams& params,
                     int workers = 1);

/// Voxel-wise noisy - denoised (may be negative). Dims must match.
Volume3D residual(const Volume3D& noisy, const Volume3D& denoised);

} // namespace nlca
