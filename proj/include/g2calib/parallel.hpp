#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace g2calib {

/// Worker budget: hardware concurrency capped by the G2CALIB_THREADS
/// environment variable (>= 1).
inline unsigned thread_budget() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("G2CALIB_THREADS")) {
        long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return hw;
}

/// Runs fn(chunk_index, begin, end) over a fixed partition of [0, n) into
/// chunk_count pieces.  The partition does not depend on the worker count,
/// so chunk-local results are reproducible.
inline void parallel_chunks(std::size_t n, std::size_t chunk_count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (chunk_count == 0) chunk_count = 1;
    unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(chunk_count));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunk_count; ++c) {
            std::size_t b = n * c / chunk_count, e = n * (c + 1) / chunk_count;
            fn(c, b, e);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (unsigned wkr = 0; wkr < workers; ++wkr)
        pool.emplace_back([&] {
            for (std::size_t c = next.fetch_add(1); c < chunk_count; c = next.fetch_add(1)) {
                std::size_t b = n * c / chunk_count, e = n * (c + 1) / chunk_count;
                fn(c, b, e);
            }
        });
    for (auto& t : pool) t.join();
}

} // namespace g2calib
