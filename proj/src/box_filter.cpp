#include "nlca/box_filter.hpp"

#include <stdexcept>
#include <vector>

#include "nlca/parallel.hpp"

namespace nlca {

namespace {

// Reflected index lookup for window offsets: refl[c + radius + d] is the
// in-range index for coordinate c displaced by d in [-radius, radius].
std::vector<int> reflect_table(int n, int radius)
{
    std::vector<int> table(static_cast<std::size_t>(n) + 2 * radius);
    for (int t = -radius; t < n + radius; ++t)
        table[static_cast<std::size_t>(t + radius)] = mirror_index(t, n);
    return table;
}

// Windowed sum along x. Each output voxel accumulates its 2r+1 taps in
// ascending offset order.
void pass_x(const std::vector<double>& in, std::vector<double>& out, int nx, int ny,
            int nz, int radius, int workers)
{
    const auto refl = reflect_table(nx, radius);
    const std::size_t rows = static_cast<std::size_t>(ny) * nz;
    parallel_chunks(0, static_cast<std::int64_t>(rows), workers,
                    [&](std::int64_t r0, std::int64_t r1) {
                        for (std::int64_t r = r0; r < r1; ++r) {
                            const double* src = in.data() + r * nx;
                            double* dst = out.data() + r * nx;
                            for (int i = 0; i < nx; ++i) {
                                double sum = 0.0;
                                for (int d = 0; d <= 2 * radius; ++d)
                                    sum += src[refl[static_cast<std::size_t>(i + d)]];
                                dst[i] = sum;
                            }
                        }
                    });
}

// Windowed sum along y or z: whole x-rows are accumulated per tap, which
// keeps the inner loop contiguous. Tap order is ascending, as in pass_x.
void pass_yz(const std::vector<double>& in, std::vector<double>& out, int nx, int ny,
             int nz, int axis, int radius, int workers)
{
    const int n = axis == 1 ? ny : nz;
    const auto refl = reflect_table(n, radius);
    const std::size_t plane = static_cast<std::size_t>(nx) * ny;

    parallel_chunks(0, nz, workers, [&](std::int64_t k0, std::int64_t k1) {
        for (int k = static_cast<int>(k0); k < static_cast<int>(k1); ++k) {
            for (int j = 0; j < ny; ++j) {
                double* dst = out.data() + plane * k + static_cast<std::size_t>(nx) * j;
                for (int i = 0; i < nx; ++i)
                    dst[i] = 0.0;
                const int c = axis == 1 ? j : k;
                for (int d = 0; d <= 2 * radius; ++d) {
                    const int cr = refl[static_cast<std::size_t>(c + d)];
                    const double* src =
                        axis == 1
                            ? in.data() + plane * k + static_cast<std::size_t>(nx) * cr
                            : in.data() + plane * cr + static_cast<std::size_t>(nx) * j;
                    for (int i = 0; i < nx; ++i)
                        dst[i] += src[i];
                }
            }
        }
    });
}

Volume3D box_mean_of(std::vector<double> field, const Volume3D& shape, int radius,
                     int workers)
{
    const int nx = shape.nx(), ny = shape.ny(), nz = shape.nz();
    std::vector<double> scratch(field.size());

    pass_x(field, scratch, nx, ny, nz, radius, workers);
    pass_yz(scratch, field, nx, ny, nz, 1, radius, workers);
    pass_yz(field, scratch, nx, ny, nz, 2, radius, workers);

    const int w = 2 * radius + 1;
    const double inv_count = 1.0 / (static_cast<double>(w) * w * w);
    Volume3D out(nx, ny, nz);
    const auto& s = shape.spacing();
    out.set_spacing(s[0], s[1], s[2]);
    for (std::size_t v = 0; v < out.size(); ++v)
        out[v] = static_cast<float>(scratch[v] * inv_count);
    return out;
}

} // namespace

Volume3D box_mean(const Volume3D& volume, int radius, int workers)
{
    if (radius < 0)
        throw std::invalid_argument("box_mean radius must be >= 0");
    std::vector<double> field(volume.size());
    for (std::size_t v = 0; v < volume.size(); ++v)
        field[v] = static_cast<double>(volume[v]);
    return box_mean_of(std::move(field), volume, radius, workers);
}

Volume3D box_mean_product(const Volume3D& a, const Volume3D& b, int radius, int workers)
{
    if (radius < 0)
        throw std::invalid_argument("box_mean radius must be >= 0");
    if (a.dims() != b.dims())
        throw std::invalid_argument("box_mean_product requires equal dims");
    std::vector<double> field(a.size());
    for (std::size_t v = 0; v < a.size(); ++v)
        field[v] = static_cast<double>(a[v]) * static_cast<double>(b[v]);
    return box_mean_of(std::move(field), a, radius, workers);
}

} // namespace nlca
