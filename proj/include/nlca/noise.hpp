#pragma once

#include <cstdint>

#include "nlca/volume.hpp"

namespace nlca {

/// Parameters of the synthetic Rician corruption: per-voxel
/// M = sqrt((A + n1)^2 + n2^2) with n1, n2 ~ Normal(0, sigma_n^2).
struct NoiseModel {
    double sigma_n = 0.0;     ///< std of each underlying Gaussian component
    std::uint64_t seed = 0;   ///< reproducibility seed
};

/// Result of the automatic noise-level estimation.
struct NoiseEstimate {
    double sigma_hat = 0.0;    ///< MAD estimate in the magnitude domain
    double theta_hat = 0.0;    ///< converged global SNR
    double sigma_n_hat = 0.0;  ///< corrected Gaussian-component std
    int iterations = 0;        ///< fixed-point iterations performed
};

/// High-high-high detail subband of a single-level separable Haar analysis;
/// dims are ceil(input dims / 2) per axis.
struct HHHField {
    std::array<int, 3> dims{0, 0, 0};
    std::vector<float> data;
};

/// Corrupt a non-negative magnitude volume with Rician noise. The two
/// Gaussian draws per voxel come from a counter-based stream keyed on
/// (seed, linear voxel index), Box-Muller transformed, n1 first, so output
/// is bit-identical for any worker count.
Volume3D add_rician(const Volume3D& volume, const NoiseModel& model, int workers = 1);

/// Single-level orthonormal Haar analysis along x, then y, then z, keeping
/// only the coefficients high-pass filtered on all three axes. Odd axis
/// lengths are extended by one mirrored sample before pairing. Every axis
/// must have size >= 2.
HHHField dwt_hhh(const Volume3D& volume);

/// Noise level of a Rician-corrupted magnitude volume: a MAD estimate over
/// the HHH coefficients, then the SNR correction resolved by fixed-point
/// iteration with theta = mean(foreground) / sigma_n, where the foreground
/// is all voxels above the global mean intensity. A constant (noise-free)
/// input yields all-zero estimates rather than an error.
NoiseEstimate estimate_noise(const Volume3D& volume);

} // namespace nlca
