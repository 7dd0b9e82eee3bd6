#include "nlca/denoise.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "nlca/box_filter.hpp"
#include "nlca/parallel.hpp"

namespace nlca {

void DenoiseParams::validate() const
{
    if (!(sigma_n >= 0.0))
        throw std::invalid_argument("sigma_n must be >= 0");
    if (patch_radius < 0 || search_radius < 0)
        throw std::invalid_argument("patch and search radii must be >= 0");
    if (!(c1 > 0.0 && c1 <= 1.0) || !(c2 > 0.0 && c2 <= 1.0))
        throw std::invalid_argument("c1 and c2 must lie in (0, 1]");
}

MomentTables build_moment_tables(const Volume3D& volume, int patch_radius, int workers)
{
    if (patch_radius < 0)
        throw std::invalid_argument("patch_radius must be >= 0");
    MomentTables tables;
    tables.mean_field = box_mean(volume, patch_radius, workers);
    tables.sqmean_field = box_mean_product(volume, volume, patch_radius, workers);
    tables.patch_radius = patch_radius;
    return tables;
}

namespace {

Volume3D like(const Volume3D& v)
{
    Volume3D out(v.nx(), v.ny(), v.nz());
    const auto& s = v.spacing();
    out.set_spacing(s[0], s[1], s[2]);
    return out;
}

std::vector<int> reflect_table(int n, int radius)
{
    std::vector<int> table(static_cast<std::size_t>(n) + 2 * radius);
    for (int t = -radius; t < n + radius; ++t)
        table[static_cast<std::size_t>(t + radius)] = mirror_index(t, n);
    return table;
}

} // namespace

Volume3D ca_filter(const Volume3D& volume, const DenoiseParams& params, int workers)
{
    params.validate();
    const MomentTables tables = build_moment_tables(volume, params.patch_radius, workers);

    Volume3D out = like(volume);
    const double two_sigma2 = 2.0 * params.sigma_n * params.sigma_n;
    parallel_chunks(0, static_cast<std::int64_t>(volume.size()), workers,
                    [&](std::int64_t v0, std::int64_t v1) {
                        for (std::int64_t v = v0; v < v1; ++v) {
                            const double m2 = tables.sqmean_field[static_cast<std::size_t>(v)];
                            out[static_cast<std::size_t>(v)] = static_cast<float>(
                                std::sqrt(std::max(m2 - two_sigma2, 0.0)));
                        }
                    });
    return out;
}

Volume3D nlca_filter(const Volume3D& volume, const DenoiseParams& params, int workers)
{
    params.validate();
    const MomentTables tables = build_moment_tables(volume, params.patch_radius, workers);
    const Volume3D& mean = tables.mean_field;
    const Volume3D& sqmean = tables.sqmean_field;

    const int nx = volume.nx(), ny = volume.ny(), nz = volume.nz();
    const int radius = params.search_radius;
    const auto xref = reflect_table(nx, radius);
    const auto yref = reflect_table(ny, radius);
    const auto zref = reflect_table(nz, radius);

    Volume3D out = like(volume);
    const double two_sigma2 = 2.0 * params.sigma_n * params.sigma_n;
    const double c1 = params.c1, c2 = params.c2;
    const int window = 2 * radius + 1;

    parallel_chunks(0, nz, workers, [&](std::int64_t k0, std::int64_t k1) {
        for (int k = static_cast<int>(k0); k < static_cast<int>(k1); ++k) {
            for (int j = 0; j < ny; ++j) {
                for (int i = 0; i < nx; ++i) {
                    const std::size_t c = volume.index(i, j, k);
                    const PatchMoments center{mean[c], sqmean[c]};
                    double sum = 0.0;
                    long count = 0;
                    for (int dk = 0; dk < window; ++dk) {
                        const std::size_t zbase =
                            static_cast<std::size_t>(zref[static_cast<std::size_t>(k + dk)]) *
                            ny;
                        for (int dj = 0; dj < window; ++dj) {
                            const std::size_t row =
                                (zbase +
                                 static_cast<std::size_t>(yref[static_cast<std::size_t>(j + dj)])) *
                                nx;
                            for (int di = 0; di < window; ++di) {
                                const std::size_t n =
                                    row + static_cast<std::size_t>(
                                              xref[static_cast<std::size_t>(i + di)]);
                                const PatchMoments candidate{mean[n], sqmean[n]};
                                if (similarity_accept(center, candidate, c1, c2)) {
                                    sum += static_cast<double>(sqmean[n]);
                                    ++count;
                                }
                            }
                        }
                    }
                    const double selected = sum / static_cast<double>(count);
                    out[c] = static_cast<float>(
                        std::sqrt(std::max(selected - two_sigma2, 0.0)));
                }
            }
        }
    });
    return out;
}

Volume3D residual(const Volume3D& noisy, const Volume3D& denoised)
{
    if (noisy.dims() != denoised.dims())
        throw std::invalid_argument("residual requires equal dims");
    Volume3D out = like(noisy);
    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = noisy[v] - denoised[v];
    return out;
}

} // namespace nlca
