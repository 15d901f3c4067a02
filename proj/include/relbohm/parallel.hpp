#pragma once

#include <algorithm>
#include <functional>
#include <thread>
#include <vector>

namespace relbohm {

// Chunked parallel loop over [0, n). Each worker owns a contiguous index
// range and writes only to its own output slots, so results are identical
// for any thread count.
inline void parallel_for(int n, int threads, const std::function<void(int, int)>& body) {
    threads = std::max(1, threads);
    if (threads == 1 || n < 2 * threads) {
        body(0, n);
        return;
    }
    const int chunk = (n + threads - 1) / threads;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) {
        const int lo = t * chunk;
        const int hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& th : pool) th.join();
}

}  // namespace relbohm
