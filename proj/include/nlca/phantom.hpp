#pragma once

#include "nlca/volume.hpp"

namespace nlca {

/// Deterministic piecewise-constant test phantom with 8-bit-range
/// intensities: a mid-gray body holding nested axis-aligned blocks of
/// brighter and darker tissue-like values, no zero background. Axis-aligned
/// faces keep the HHH wavelet band clean, which makes the phantom a fair
/// target for the noise estimator as well as for denoising benchmarks.
/// `n` scales the whole layout (default edge 64 voxels).
Volume3D make_piecewise_phantom(int n = 64);

/// Two-region phantom: value `low` where x < nx/2, `high` elsewhere. Used to
/// probe edge behaviour of the filters.
Volume3D make_two_region_phantom(int n = 32, float low = 10.0f, float high = 100.0f);

} // namespace nlca
