#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace nlca {

/// Split [begin, end) into at most `workers` contiguous chunks and run
/// `body(chunk_begin, chunk_end)` on each. Chunk boundaries are a pure
/// function of the range and worker count, and bodies must write disjoint
/// outputs, so results cannot depend on scheduling. workers <= 1 runs inline.
inline void parallel_chunks(std::int64_t begin, std::int64_t end, int workers,
                            const std::function<void(std::int64_t, std::int64_t)>& body)
{
    const std::int64_t n = end - begin;
    if (n <= 0)
        return;
    if (workers <= 1 || n == 1) {
        body(begin, end);
        return;
    }
    const int chunks = static_cast<int>(std::min<std::int64_t>(workers, n));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(chunks));
    std::exception_ptr error;
    std::mutex error_mutex;
    for (int c = 0; c < chunks; ++c) {
        const std::int64_t lo = begin + n * c / chunks;
        const std::int64_t hi = begin + n * (c + 1) / chunks;
        pool.emplace_back([&, lo, hi] {
            try {
                body(lo, hi);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace nlca
