#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace rsq {

/// Runs fn(i) for i in [0, count) across `workers` threads.
///
/// Work is split in contiguous blocks and each item writes only to its own
/// index, so results are identical for any worker count; reductions are done
/// by the caller in index order afterwards.
inline void parallel_for_index(std::size_t count, unsigned workers,
                               const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned n = workers;
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        pool.emplace_back([&, w] {
            const std::size_t lo = count * w / n;
            const std::size_t hi = count * (w + 1) / n;
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

inline unsigned default_workers() {
    const unsigned h = std::thread::hardware_concurrency();
    return h == 0 ? 1 : h;
}

} // namespace rsq
