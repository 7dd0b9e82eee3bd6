#pragma once

#include "nlca/volume.hpp"

namespace nlca {

/// Moving-average over the cubic (2r+1)^3 window centered at each voxel,
/// mirror boundary. Computed as three separable 1D passes with double
/// accumulators; the result is converted to float once per voxel. Equals the
/// direct windowed mean up to summation order.
Volume3D box_mean(const Volume3D& volume, int radius, int workers = 1);

/// Same filter applied to the voxel-wise product of two equally sized
/// volumes (used for second moments and covariances).
Volume3D box_mean_product(const Volume3D& a, const Volume3D& b, int radius,
                          int workers = 1);

} // namespace nlca
