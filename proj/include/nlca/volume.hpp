#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace nlca {

/// Storage formats supported for on-disk samples.
enum class SampleType { u8, i16, f32 };

enum class Endianness { little, big };

/// Mirror-reflect an index into [0, n) without repeating the edge sample:
/// index -1 maps to 1, index n maps to n-2. An axis of size 1 always maps
/// to 0. Valid for arbitrarily far out-of-range indices.
inline int mirror_index(long long i, int n)
{
    if (n <= 1)
        return 0;
    const long long period = 2LL * (n - 1);
    long long m = i % period;
    if (m < 0)
        m += period;
    return static_cast<int>(m < n ? m : period - m);
}

/// Dense 3D scalar field, x fastest, then y, then z. All processing is done
/// in 32-bit floats; integral input samples are promoted on load.
///
/// MRI magnitude volumes fed to the denoising and estimation routines are
/// expected to be non-negative; residuals and wavelet coefficients may carry
/// any sign.
class Volume3D {
public:
    Volume3D() = default;
    Volume3D(int nx, int ny, int nz, float fill = 0.0f);
    Volume3D(int nx, int ny, int nz, std::vector<float> values);

    int nx() const { return dims_[0]; }
    int ny() const { return dims_[1]; }
    int nz() const { return dims_[2]; }
    const std::array<int, 3>& dims() const { return dims_; }

    /// Voxel spacing in millimetres, all components > 0.
    const std::array<double, 3>& spacing() const { return spacing_; }
    void set_spacing(double sx, double sy, double sz);

    std::size_t size() const { return values_.size(); }

    /// Linear index of (i, j, k); x is the fastest-varying axis.
    std::size_t index(int i, int j, int k) const
    {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(dims_[0]) *
                   (static_cast<std::size_t>(j) +
                    static_cast<std::size_t>(dims_[1]) * static_cast<std::size_t>(k));
    }

    float operator()(int i, int j, int k) const { return values_[index(i, j, k)]; }
    float& operator()(int i, int j, int k) { return values_[index(i, j, k)]; }

    float operator[](std::size_t linear) const { return values_[linear]; }
    float& operator[](std::size_t linear) { return values_[linear]; }

    /// Value at a possibly out-of-range index, mirror-reflected per axis.
    float sample_mirrored(int i, int j, int k) const
    {
        return values_[index(mirror_index(i, dims_[0]), mirror_index(j, dims_[1]),
                             mirror_index(k, dims_[2]))];
    }

    std::span<const float> values() const { return values_; }
    std::span<float> values() { return values_; }

private:
    std::array<int, 3> dims_{0, 0, 0};
    std::array<double, 3> spacing_{1.0, 1.0, 1.0};
    std::vector<float> values_;
};

/// Extract a sub-volume. `origin + extent` must lie within the source dims;
/// spacing is preserved.
Volume3D crop(const Volume3D& volume, const std::array<int, 3>& origin,
              const std::array<int, 3>& extent);

} // namespace nlca
