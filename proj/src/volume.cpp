#include "nlca/volume.hpp"

#include <stdexcept>
#include <string>

namespace nlca {

namespace {

std::size_t checked_voxel_count(int nx, int ny, int nz)
{
    if (nx < 1 || ny < 1 || nz < 1)
        throw std::invalid_argument("volume dims must all be >= 1, got (" +
                                    std::to_string(nx) + "," + std::to_string(ny) + "," +
                                    std::to_string(nz) + ")");
    return static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny) *
           static_cast<std::size_t>(nz);
}

} // namespace

Volume3D::Volume3D(int nx, int ny, int nz, float fill)
    : dims_{nx, ny, nz}, values_(checked_voxel_count(nx, ny, nz), fill)
{
}

Volume3D::Volume3D(int nx, int ny, int nz, std::vector<float> values)
    : dims_{nx, ny, nz}, values_(std::move(values))
{
    if (values_.size() != checked_voxel_count(nx, ny, nz))
        throw std::invalid_argument("volume data length " + std::to_string(values_.size()) +
                                    " does not match dims product");
}

void Volume3D::set_spacing(double sx, double sy, double sz)
{
    if (!(sx > 0.0) || !(sy > 0.0) || !(sz > 0.0))
        throw std::invalid_argument("voxel spacing must be > 0 on every axis");
    spacing_ = {sx, sy, sz};
}

Volume3D crop(const Volume3D& volume, const std::array<int, 3>& origin,
              const std::array<int, 3>& extent)
{
    for (int a = 0; a < 3; ++a) {
        if (origin[a] < 0 || extent[a] < 1 ||
            origin[a] + extent[a] > volume.dims()[a])
            throw std::out_of_range("crop region exceeds volume bounds on axis " +
                                    std::to_string(a));
    }

    Volume3D out(extent[0], extent[1], extent[2]);
    const auto& s = volume.spacing();
    out.set_spacing(s[0], s[1], s[2]);
    for (int k = 0; k < extent[2]; ++k)
        for (int j = 0; j < extent[1]; ++j)
            for (int i = 0; i < extent[0]; ++i)
                out(i, j, k) = volume(origin[0] + i, origin[1] + j, origin[2] + k);
    return out;
}

} // namespace nlca
