#pragma once

// Reference implementations kept deliberately naive; the library is checked
// against these, never the other way around.

#include <cmath>
#include <utility>

#include "nlca/denoise.hpp"
#include "nlca/volume.hpp"

namespace oracle {

/// I0 by direct power series, long double accumulation. All terms are
/// positive, so this is accurate to a few ulp for any argument below the
/// double overflow range.
inline double bessel_i0_series(double x)
{
    const long double q = 0.25L * static_cast<long double>(x) * x;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (term < sum * 1e-22L)
            break;
    }
    return static_cast<double>(sum);
}

/// I1 by direct power series (odd in x).
inline double bessel_i1_series(double x)
{
    const long double ax = std::fabs(static_cast<long double>(x));
    const long double q = 0.25L * ax * ax;
    long double term = 0.5L * ax, sum = term;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<long double>(k) * (k + 1));
        sum += term;
        if (term < sum * 1e-22L)
            break;
    }
    return x < 0 ? -static_cast<double>(sum) : static_cast<double>(sum);
}

/// Patch mean and second moment at one voxel by direct window enumeration
/// with mirrored sampling.
inline nlca::PatchMoments patch_moments_direct(const nlca::Volume3D& v, int i, int j,
                                               int k, int radius)
{
    double sum = 0.0, sq = 0.0;
    for (int dk = -radius; dk <= radius; ++dk)
        for (int dj = -radius; dj <= radius; ++dj)
            for (int di = -radius; di <= radius; ++di) {
                const double x = v.sample_mirrored(i + di, j + dj, k + dk);
                sum += x;
                sq += x * x;
            }
    const double count = std::pow(2.0 * radius + 1.0, 3.0);
    return {sum / count, sq / count};
}

/// Literal per-voxel reference for the non-local filter: enumerate the
/// search window in ascending z, y, x order, test each candidate's
/// precomputed patch moments against the center's, average the accepted
/// second moments, and apply the bias-corrected square root.
inline nlca::Volume3D nlca_reference(const nlca::Volume3D& v,
                                     const nlca::DenoiseParams& p)
{
    const nlca::MomentTables tables = nlca::build_moment_tables(v, p.patch_radius);
    const int R = p.search_radius;
    const double two_sigma2 = 2.0 * p.sigma_n * p.sigma_n;

    nlca::Volume3D out(v.nx(), v.ny(), v.nz());
    for (int k = 0; k < v.nz(); ++k)
        for (int j = 0; j < v.ny(); ++j)
            for (int i = 0; i < v.nx(); ++i) {
                const std::size_t c = v.index(i, j, k);
                const nlca::PatchMoments center{tables.mean_field[c],
                                                tables.sqmean_field[c]};
                double sum = 0.0;
                long count = 0;
                for (int dk = -R; dk <= R; ++dk)
                    for (int dj = -R; dj <= R; ++dj)
                        for (int di = -R; di <= R; ++di) {
                            const std::size_t n = v.index(
                                nlca::mirror_index(i + di, v.nx()),
                                nlca::mirror_index(j + dj, v.ny()),
                                nlca::mirror_index(k + dk, v.nz()));
                            const nlca::PatchMoments cand{tables.mean_field[n],
                                                          tables.sqmean_field[n]};
                            if (nlca::similarity_accept(center, cand, p.c1, p.c2)) {
                                sum += static_cast<double>(tables.sqmean_field[n]);
                                ++count;
                            }
                        }
                const double selected = sum / static_cast<double>(count);
                out[c] = static_cast<float>(
                    std::sqrt(std::max(selected - two_sigma2, 0.0)));
            }
    return out;
}

/// Same filter, but every candidate's patch moments are recomputed from the
/// raw voxels on the spot. This is the O(search^3 * patch^3) cost the moment
/// tables exist to avoid; used as the timing baseline.
inline nlca::Volume3D nlca_recompute_reference(const nlca::Volume3D& v,
                                               const nlca::DenoiseParams& p)
{
    const int R = p.search_radius;
    const double two_sigma2 = 2.0 * p.sigma_n * p.sigma_n;

    nlca::Volume3D out(v.nx(), v.ny(), v.nz());
    for (int k = 0; k < v.nz(); ++k)
        for (int j = 0; j < v.ny(); ++j)
            for (int i = 0; i < v.nx(); ++i) {
                const auto center = patch_moments_direct(v, i, j, k, p.patch_radius);
                double sum = 0.0;
                long count = 0;
                for (int dk = -R; dk <= R; ++dk)
                    for (int dj = -R; dj <= R; ++dj)
                        for (int di = -R; di <= R; ++di) {
                            const auto cand = patch_moments_direct(
                                v, nlca::mirror_index(i + di, v.nx()),
                                nlca::mirror_index(j + dj, v.ny()),
                                nlca::mirror_index(k + dk, v.nz()), p.patch_radius);
                            if (nlca::similarity_accept(center, cand, p.c1, p.c2)) {
                                sum += cand.sqmean;
                                ++count;
                            }
                        }
                const double selected = sum / static_cast<double>(count);
                out[v.index(i, j, k)] = static_cast<float>(
                    std::sqrt(std::max(selected - two_sigma2, 0.0)));
            }
    return out;
}

} // namespace oracle
