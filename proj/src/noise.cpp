#include "nlca/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "nlca/parallel.hpp"
#include "nlca/rng.hpp"
#include "nlca/special_math.hpp"

namespace nlca {

Volume3D add_rician(const Volume3D& volume, const NoiseModel& model, int workers)
{
    if (!(model.sigma_n >= 0.0))
        throw std::invalid_argument("add_rician requires sigma_n >= 0");

    Volume3D out(volume.nx(), volume.ny(), volume.nz());
    const auto& s = volume.spacing();
    out.set_spacing(s[0], s[1], s[2]);

    if (model.sigma_n == 0.0) {
        std::copy(volume.values().begin(), volume.values().end(), out.values().begin());
        return out;
    }

    const double sigma = model.sigma_n;
    parallel_chunks(0, static_cast<std::int64_t>(volume.size()), workers,
                    [&](std::int64_t v0, std::int64_t v1) {
                        for (std::int64_t v = v0; v < v1; ++v) {
                            const auto [g1, g2] = gaussian_pair(
                                model.seed, static_cast<std::uint64_t>(v));
                            const double a = volume[static_cast<std::size_t>(v)];
                            const double re = a + sigma * g1;
                            const double im = sigma * g2;
                            out[static_cast<std::size_t>(v)] =
                                static_cast<float>(std::sqrt(re * re + im * im));
                        }
                    });
    return out;
}

namespace {

constexpr float kInvSqrt2f = 0.70710678118654752440f;

// High-pass pair reduction along one axis: coefficient h[p] =
// (v[2p] - v[2p+1]) / sqrt(2), with v[n] := v[n-2] appended when n is odd.
void haar_high_pass_x(const std::vector<float>& in, std::vector<float>& out, int nx,
                      int rows)
{
    const int hx = (nx + 1) / 2;
    for (int r = 0; r < rows; ++r) {
        const float* src = in.data() + static_cast<std::size_t>(r) * nx;
        float* dst = out.data() + static_cast<std::size_t>(r) * hx;
        for (int p = 0; p < hx; ++p) {
            const int a = 2 * p;
            const int b = (a + 1 < nx) ? a + 1 : nx - 2;
            dst[p] = (src[a] - src[b]) * kInvSqrt2f;
        }
    }
}

// Transpose the fastest axis to the back: (nx, ny, nz) -> (ny, nz, nx).
// Applying high_pass_x after this rotation walks the volume through all
// three axes in x, y, z order.
std::vector<float> rotate_axes(const std::vector<float>& in, int nx, int ny, int nz)
{
    std::vector<float> out(in.size());
    for (int k = 0; k < nz; ++k)
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const std::size_t src = static_cast<std::size_t>(i) +
                                        static_cast<std::size_t>(nx) *
                                            (j + static_cast<std::size_t>(ny) * k);
                const std::size_t dst = static_cast<std::size_t>(j) +
                                        static_cast<std::size_t>(ny) *
                                            (k + static_cast<std::size_t>(nz) * i);
                out[dst] = in[src];
            }
    return out;
}

} // namespace

HHHField dwt_hhh(const Volume3D& volume)
{
    const int nx = volume.nx(), ny = volume.ny(), nz = volume.nz();
    if (nx < 2 || ny < 2 || nz < 2)
        throw std::invalid_argument("dwt_hhh requires every axis to have size >= 2");

    const int hx = (nx + 1) / 2, hy = (ny + 1) / 2, hz = (nz + 1) / 2;

    // x pass on (nx, ny, nz), then rotate so y leads, then z.
    std::vector<float> a(volume.values().begin(), volume.values().end());
    std::vector<float> b(static_cast<std::size_t>(hx) * ny * nz);
    haar_high_pass_x(a, b, nx, ny * nz);

    a = rotate_axes(b, hx, ny, nz); // (ny, nz, hx)
    b.assign(static_cast<std::size_t>(hy) * nz * hx, 0.0f);
    haar_high_pass_x(a, b, ny, nz * hx);

    a = rotate_axes(b, hy, nz, hx); // (nz, hx, hy)
    b.assign(static_cast<std::size_t>(hz) * hx * hy, 0.0f);
    haar_high_pass_x(a, b, nz, hx * hy);

    // One more rotation restores x-fastest order: (nz, hx, hy) reduced on z
    // is (hz, hx, hy); rotating gives (hx, hy, hz).
    HHHField field;
    field.dims = {hx, hy, hz};
    field.data = rotate_axes(b, hz, hx, hy);
    return field;
}

NoiseEstimate estimate_noise(const Volume3D& volume)
{
    const HHHField hhh = dwt_hhh(volume);

    NoiseEstimate est;
    est.sigma_hat = mad_sigma(std::span<const float>(hhh.data));
    if (est.sigma_hat == 0.0)
        return est; // constant or noise-free input

    double mean = 0.0;
    for (const float v : volume.values())
        mean += v;
    mean /= static_cast<double>(volume.size());

    double fg_sum = 0.0;
    std::size_t fg_count = 0;
    for (const float v : volume.values()) {
        if (v > mean) {
            fg_sum += v;
            ++fg_count;
        }
    }
    const double fg_mean = fg_count > 0 ? fg_sum / static_cast<double>(fg_count) : mean;

    double sigma_n = est.sigma_hat;
    double theta = 0.0;
    int iterations = 0;
    for (; iterations < 100; ++iterations) {
        theta = fg_mean / sigma_n;
        const double next = est.sigma_hat / std::sqrt(xi_correction(theta));
        const double rel = std::fabs(next - sigma_n) / sigma_n;
        sigma_n = next;
        if (rel < 1e-6) {
            ++iterations;
            break;
        }
    }

    est.theta_hat = theta;
    est.sigma_n_hat = sigma_n;
    est.iterations = iterations;
    return est;
}

} // namespace nlca
