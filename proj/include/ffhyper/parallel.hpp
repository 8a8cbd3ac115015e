#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace ffh {

// Partition [0, n) into contiguous chunks, one worker per chunk.  Workers
// write to disjoint output slots, so results are independent of the thread
// count.
inline void parallel_for(std::int64_t n, int threads,
                         const std::function<void(std::int64_t, std::int64_t)>& fn) {
    if (threads <= 1 || n < 2) {
        fn(0, n);
        return;
    }
    int workers = int(std::min<std::int64_t>(threads, n));
    std::vector<std::thread> pool;
    std::int64_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::int64_t lo = w * chunk;
        std::int64_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(fn, lo, hi);
    }
    for (auto& t : pool) t.join();
}

}  // namespace ffh
