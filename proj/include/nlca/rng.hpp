#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace nlca {

/// Counter-based generator (Philox-2x64, 10 rounds). A block is a pure
/// function of (key, counter), so any voxel's draws can be produced in any
/// order by any worker with identical results.
struct Philox2x64 {
    static constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ULL;
    static constexpr std::uint64_t kKeyWeyl = 0x9E3779B97F4A7C15ULL;

    static std::pair<std::uint64_t, std::uint64_t>
    block(std::uint64_t key, std::uint64_t ctr0, std::uint64_t ctr1)
    {
        for (int round = 0; round < 10; ++round) {
#if defined(__SIZEOF_INT128__)
            const unsigned __int128 prod =
                static_cast<unsigned __int128>(kMultiplier) * ctr0;
            const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
            const std::uint64_t lo = static_cast<std::uint64_t>(prod);
#else
            const std::uint64_t a = kMultiplier >> 32, b = kMultiplier & 0xFFFFFFFFULL;
            const std::uint64_t c = ctr0 >> 32, d = ctr0 & 0xFFFFFFFFULL;
            const std::uint64_t bd = b * d;
            const std::uint64_t ad = a * d, bc = b * c;
            const std::uint64_t mid = (bd >> 32) + (ad & 0xFFFFFFFFULL) + (bc & 0xFFFFFFFFULL);
            const std::uint64_t hi = a * c + (ad >> 32) + (bc >> 32) + (mid >> 32);
            const std::uint64_t lo = (mid << 32) | (bd & 0xFFFFFFFFULL);
#endif
            ctr0 = hi ^ key ^ ctr1;
            ctr1 = lo;
            key += kKeyWeyl;
        }
        return {ctr0, ctr1};
    }
};

/// Two unit-variance Gaussian draws for a given (seed, counter) pair via the
/// Box-Muller transform. The first return value is n1, the second n2; the
/// mapping is fixed so outputs never depend on evaluation order.
inline std::pair<double, double> gaussian_pair(std::uint64_t seed, std::uint64_t counter)
{
    const auto [a, b] = Philox2x64::block(seed, counter, 0);
    // 53-bit mantissas; u1 in (0, 1] keeps the log finite, u2 in [0, 1).
    const double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * 3.141592653589793238462643383279502884 * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

} // namespace nlca
