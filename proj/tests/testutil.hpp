#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <unistd.h>

#include "nlca/volume.hpp"

namespace testutil {

/// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir()
    {
        static std::atomic<unsigned> counter{0};
        const auto base = std::filesystem::temp_directory_path();
        path_ = base / ("nlca_test_" + std::to_string(::getpid()) + "_" +
                        std::to_string(counter.fetch_add(1)));
        std::filesystem::create_directories(path_);
    }
    ~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

inline nlca::Volume3D random_volume(int nx, int ny, int nz, std::uint32_t seed,
                                    float lo = 0.0f, float hi = 1.0f)
{
    std::mt19937 gen(seed);
    std::uniform_real_distribution<float> dist(lo, hi);
    nlca::Volume3D v(nx, ny, nz);
    for (auto& x : v.values())
        x = dist(gen);
    return v;
}

inline bool bitwise_equal(const nlca::Volume3D& a, const nlca::Volume3D& b)
{
    if (a.dims() != b.dims())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

inline double max_abs_diff(const nlca::Volume3D& a, const nlca::Volume3D& b)
{
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(static_cast<double>(a[i]) - b[i]));
    return m;
}

} // namespace testutil
