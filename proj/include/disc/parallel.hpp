#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace disc {

// Static block partition of [0, count) over worker threads. Each index is
// processed exactly once and results are written to index-addressed slots,
// so the outcome is independent of the thread count.
template <typename Fn>
void parallel_for(std::size_t count, const Fn& fn) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(hw ? hw : 1, count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        std::size_t lo = w * chunk;
        std::size_t hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace disc
