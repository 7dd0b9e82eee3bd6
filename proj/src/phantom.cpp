#include "nlca/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nlca {

namespace {

// Paint an axis-aligned block whose value ramps over roughly two voxels at
// the faces, imitating partial-volume transitions. Bounds are fractions of
// each axis length.
void paint_block(Volume3D& v, double lo, double hi, float value)
{
    const auto bound = [](int n, double f) { return static_cast<int>(f * n); };
    const int x0 = bound(v.nx(), lo), x1 = bound(v.nx(), hi);
    const int y0 = bound(v.ny(), lo), y1 = bound(v.ny(), hi);
    const int z0 = bound(v.nz(), lo), z1 = bound(v.nz(), hi);
    for (int k = z0; k < z1; ++k)
        for (int j = y0; j < y1; ++j)
            for (int i = x0; i < x1; ++i) {
                const int depth = std::min({i - x0, x1 - 1 - i, j - y0, y1 - 1 - j,
                                            k - z0, z1 - 1 - k});
                const float t = std::min(1.0f, 0.5f * (static_cast<float>(depth) + 1.0f));
                float& cell = v(i, j, k);
                cell = cell + t * (value - cell);
            }
}

// Paint a ball with a one-voxel soft rim.
void paint_ball(Volume3D& v, double cx, double cy, double cz, double radius_frac,
                float value)
{
    const double r = radius_frac * v.nx();
    const double x = cx * v.nx(), y = cy * v.ny(), z = cz * v.nz();
    const int lo_i = std::max(0, static_cast<int>(x - r - 2));
    const int hi_i = std::min(v.nx() - 1, static_cast<int>(x + r + 2));
    const int lo_j = std::max(0, static_cast<int>(y - r - 2));
    const int hi_j = std::min(v.ny() - 1, static_cast<int>(y + r + 2));
    const int lo_k = std::max(0, static_cast<int>(z - r - 2));
    const int hi_k = std::min(v.nz() - 1, static_cast<int>(z + r + 2));
    for (int k = lo_k; k <= hi_k; ++k)
        for (int j = lo_j; j <= hi_j; ++j)
            for (int i = lo_i; i <= hi_i; ++i) {
                const double di = i - x, dj = j - y, dk = k - z;
                const double dist = std::sqrt(di * di + dj * dj + dk * dk);
                const double t = std::clamp(r - dist + 1.0, 0.0, 1.0);
                float& cell = v(i, j, k);
                cell = cell + static_cast<float>(t) * (value - cell);
            }
}

} // namespace

Volume3D make_piecewise_phantom(int n)
{
    if (n < 16)
        throw std::invalid_argument("piecewise phantom needs n >= 16");

    Volume3D v(n, n, n, 120.0f);
    paint_block(v, 0.125, 0.875, 200.0f);   // bulk bright tissue
    paint_block(v, 0.3125, 0.6875, 160.0f); // inner compartment
    paint_block(v, 0.4375, 0.5625, 90.0f);  // dark core

    // A lattice of small bright nodules inside the bulk region. They are a
    // few voxels across, so a patch search finds only a handful of similar
    // patches; that keeps the benchmark sensitive to the noise level.
    for (double cx : {0.21, 0.79})
        for (double cy : {0.21, 0.5, 0.79})
            for (double cz : {0.21, 0.5, 0.79})
                paint_ball(v, cx, cy, cz, 0.031, 250.0f);
    for (double cy : {0.21, 0.79})
        for (double cz : {0.21, 0.79})
            paint_ball(v, 0.5, cy, cz, 0.031, 70.0f);
    return v;
}

Volume3D make_two_region_phantom(int n, float low, float high)
{
    if (n < 2)
        throw std::invalid_argument("two-region phantom needs n >= 2");
    Volume3D v(n, n, n, high);
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n / 2; ++i)
                v(i, j, k) = low;
    return v;
}

} // namespace nlca
